#ifndef QF_MATRIX_HPP
#define QF_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qf/rational.hpp"

namespace qf {

using RatVec = std::vector<Rational>;

/// Dense rational matrix. All elimination is exact; a pivot is any nonzero
/// entry of the remaining submatrix (scanned in a fixed order, so results
/// are deterministic).
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t dim, const std::vector<RatVec>& cols);
  static Matrix from_rows(std::size_t dim, const std::vector<RatVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RatVec column(std::size_t j) const;
  RatVec row(std::size_t i) const;

  Matrix transposed() const;
  Matrix operator*(const Matrix& rhs) const;
  RatVec operator*(const RatVec& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rational& c) const;
  bool operator==(const Matrix& rhs) const = default;

  bool is_zero() const;
  std::size_t rank() const;
  bool invertible() const { return rows_ == cols_ && rank() == rows_; }
  std::optional<Matrix> inverse() const;

  /// Basis of {x : A x = 0}, one column vector per basis element.
  std::vector<RatVec> kernel_basis() const;

 private:
  std::size_t rows_, cols_;
  RatVec data_;
};

struct LinearSolution {
  RatVec particular;
  std::vector<RatVec> nullspace;
};

/// Exact Gauss-Jordan solve of A x = b. Returns nullopt when inconsistent.
/// Every returned solution is re-substituted into the system before it is
/// handed back; the sizes in play make that check essentially free.
std::optional<LinearSolution> solve_linear(const Matrix& a, const RatVec& b);

RatVec rat_vec_add(const RatVec& a, const RatVec& b);
RatVec rat_vec_sub(const RatVec& a, const RatVec& b);
RatVec rat_vec_scale(const Rational& c, const RatVec& a);
bool rat_vec_is_zero(const RatVec& a);

}  // namespace qf

#endif
