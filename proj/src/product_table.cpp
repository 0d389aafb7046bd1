#include "qf/product_table.hpp"

namespace qf {

ProductTable::ProductTable(SpacePtr space)
    : space_(std::move(space)), t_(space_->dim() * space_->dim() * space_->dim()) {}

ProductTable::ProductTable(SpacePtr space, std::vector<Rational> constants)
    : space_(std::move(space)), t_(std::move(constants)) {
  const std::size_t n = space_->dim();
  if (t_.size() != n * n * n) throw UsageError("product tensor has wrong size");
  check_grading();
}

void ProductTable::check_grading() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!qf::is_zero(coeff(i, j, k)) &&
            space_->parity(k) != space_->parity(i) + space_->parity(j))
          throw UsageError("product entry (" + space_->name(i) + "," +
                           space_->name(j) + ") -> " + space_->name(k) +
                           " violates the parity grading");
}

RatVec ProductTable::product(std::size_t i, std::size_t j) const {
  RatVec out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = coeff(i, j, k);
  return out;
}

void ProductTable::set_product(std::size_t i, std::size_t j, const RatVec& coords) {
  const std::size_t n = dim();
  if (coords.size() != n) throw UsageError("set_product coordinate mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    if (!qf::is_zero(coords[k]) &&
        space_->parity(k) != space_->parity(i) + space_->parity(j))
      throw UsageError("product entry (" + space_->name(i) + "," + space_->name(j) +
                       ") -> " + space_->name(k) + " violates the parity grading");
    t_[(i * n + j) * n + k] = coords[k];
  }
}

RatVec ProductTable::apply(const RatVec& u, const RatVec& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw UsageError("product applied to wrong sizes");
  RatVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (qf::is_zero(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (qf::is_zero(v[j])) continue;
      Rational f = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!qf::is_zero(coeff(i, j, k))) out[k] += f * coeff(i, j, k);
    }
  }
  return out;
}

Vec ProductTable::apply(const Vec& u, const Vec& v) const {
  if (!u.space->same_basis(*space_) || !v.space->same_basis(*space_))
    throw UsageError("product applied across spaces");
  return Vec(space_, apply(u.coords, v.coords));
}

LinearOperator ProductTable::left_mult(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m.at(k, j) = coeff(i, j, k);
  return LinearOperator(space_, space_->parity(i), std::move(m));
}

LinearOperator ProductTable::right_mult(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    int s = sign_of(space_->parity(i), space_->parity(j));
    for (std::size_t k = 0; k < n; ++k) m.at(k, j) = Rational(s) * coeff(j, i, k);
  }
  return LinearOperator(space_, space_->parity(i), std::move(m));
}

LinearOperator ProductTable::left_mult(const Vec& u) const {
  if (!u.is_homogeneous()) throw UsageError("left_mult of a mixed-parity vector");
  LinearOperator acc = LinearOperator::zero(space_, u.parity());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!qf::is_zero(u.coords[i])) acc = acc + left_mult(i).scaled(u.coords[i]);
  return acc;
}

LinearOperator ProductTable::right_mult(const Vec& u) const {
  if (!u.is_homogeneous()) throw UsageError("right_mult of a mixed-parity vector");
  LinearOperator acc = LinearOperator::zero(space_, u.parity());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!qf::is_zero(u.coords[i])) acc = acc + right_mult(i).scaled(u.coords[i]);
  return acc;
}

ProductTable ProductTable::commutator_table() const {
  const std::size_t n = dim();
  ProductTable out(space_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int s = sign_of(space_->parity(i), space_->parity(j));
      RatVec c(n);
      for (std::size_t k = 0; k < n; ++k)
        c[k] = coeff(i, j, k) - Rational(s) * coeff(j, i, k);
      out.set_product(i, j, c);
    }
  return out;
}

ProductTable ProductTable::opposite_table() const {
  const std::size_t n = dim();
  ProductTable out(space_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int s = sign_of(space_->parity(i), space_->parity(j));
      RatVec c(n);
      for (std::size_t k = 0; k < n; ++k) c[k] = -Rational(s) * coeff(j, i, k);
      out.set_product(i, j, c);
    }
  return out;
}

ProductTable ProductTable::operator+(const ProductTable& rhs) const {
  if (!rhs.space_->same_basis(*space_)) throw UsageError("table sum across spaces");
  ProductTable out(space_);
  for (std::size_t idx = 0; idx < t_.size(); ++idx)
    out.t_[idx] = t_[idx] + rhs.t_[idx];
  out.check_grading();
  return out;
}

bool ProductTable::is_zero() const {
  for (const auto& q : t_)
    if (!qf::is_zero(q)) return false;
  return true;
}

}  // namespace qf
