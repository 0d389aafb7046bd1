#include "qf/matrix.hpp"

#include <utility>

namespace qf {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t dim, const std::vector<RatVec>& cols) {
  Matrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw UsageError("column dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t dim, const std::vector<RatVec>& rows) {
  Matrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) throw UsageError("row dimension mismatch");
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatVec Matrix::column(std::size_t j) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

RatVec Matrix::row(std::size_t i) const {
  RatVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Matrix Matrix::transposed() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw UsageError("matrix product dimension mismatch");
  Matrix m(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (qf::is_zero(aik)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        m.at(i, j) += aik * rhs.at(k, j);
    }
  return m;
}

RatVec Matrix::operator*(const RatVec& v) const {
  if (cols_ != v.size()) throw UsageError("matrix-vector dimension mismatch");
  RatVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!qf::is_zero(at(i, j))) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw UsageError("matrix sum dimension mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + rhs.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw UsageError("matrix difference dimension mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - rhs.data_[i];
  return m;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = c * data_[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& q : data_)
    if (!qf::is_zero(q)) return false;
  return true;
}

namespace {

// Reduced row echelon form in place. Returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m.at(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(p, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return rref(m).size();
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != rows_) return std::nullopt;
  Matrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::vector<RatVec> Matrix::kernel_basis() const {
  Matrix m = *this;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const RatVec& b) {
  if (a.rows() != b.size())
    throw UsageError("solve_linear: right-hand side dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  LinearSolution sol;
  sol.particular.assign(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    sol.particular[pivots[r]] = aug.at(r, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -aug.at(r, free);
    sol.nullspace.push_back(std::move(v));
  }
  // Exactness check by re-substitution.
  RatVec check = a * sol.particular;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (check[i] != b[i]) throw std::logic_error("solve_linear residual");
  return sol;
}

RatVec rat_vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw UsageError("vector sum dimension mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec rat_vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw UsageError("vector difference dimension mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec rat_vec_scale(const Rational& c, const RatVec& a) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool rat_vec_is_zero(const RatVec& a) {
  for (const auto& q : a)
    if (!is_zero(q)) return false;
  return true;
}

}  // namespace qf
