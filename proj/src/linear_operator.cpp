#include "qf/linear_operator.hpp"

namespace qf {

LinearOperator::LinearOperator(SpacePtr space, Parity parity, Matrix matrix)
    : space_(std::move(space)), parity_(parity), matrix_(std::move(matrix)) {
  const std::size_t n = space_->dim();
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw UsageError("operator matrix has wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!qf::is_zero(matrix_.at(i, j)) &&
          space_->parity(i) != space_->parity(j) + parity_)
        throw UsageError("operator entry (" + space_->name(i) + "," +
                         space_->name(j) + ") violates the declared parity");
}

LinearOperator LinearOperator::zero(const SpacePtr& s, Parity p) {
  return LinearOperator(s, p, Matrix(s->dim(), s->dim()));
}

LinearOperator LinearOperator::identity(const SpacePtr& s) {
  return LinearOperator(s, Parity::even, Matrix::identity(s->dim()));
}

Vec LinearOperator::apply(const Vec& v) const {
  if (!v.space->same_basis(*space_)) throw UsageError("operator applied across spaces");
  return Vec(space_, matrix_ * v.coords);
}

RatVec LinearOperator::apply(const RatVec& coords) const { return matrix_ * coords; }

LinearOperator LinearOperator::compose(const LinearOperator& inner) const {
  return LinearOperator(space_, parity_ + inner.parity_, matrix_ * inner.matrix_);
}

LinearOperator LinearOperator::operator+(const LinearOperator& rhs) const {
  if (parity_ != rhs.parity_) throw UsageError("sum of operators of unequal parity");
  return LinearOperator(space_, parity_, matrix_ + rhs.matrix_);
}

LinearOperator LinearOperator::operator-(const LinearOperator& rhs) const {
  if (parity_ != rhs.parity_) throw UsageError("difference of operators of unequal parity");
  return LinearOperator(space_, parity_, matrix_ - rhs.matrix_);
}

LinearOperator LinearOperator::scaled(const Rational& c) const {
  return LinearOperator(space_, parity_, matrix_.scaled(c));
}

bool LinearOperator::is_nilpotent() const {
  Matrix power = matrix_;
  for (std::size_t k = 1; k < space_->dim(); ++k) {
    if (power.is_zero()) return true;
    power = power * matrix_;
  }
  return power.is_zero();
}

Rational LinearOperator::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < space_->dim(); ++i) t += matrix_.at(i, i);
  return t;
}

LinearOperator LinearOperator::super_commutator(const LinearOperator& a,
                                                const LinearOperator& b) {
  int s = sign_of(a.parity(), b.parity());
  Matrix m = a.matrix() * b.matrix() - (b.matrix() * a.matrix()).scaled(Rational(s));
  return LinearOperator(a.space(), a.parity() + b.parity(), std::move(m));
}

LinearOperator LinearOperator::anti_commutator(const LinearOperator& a,
                                               const LinearOperator& b) {
  Matrix m = a.matrix() * b.matrix() + b.matrix() * a.matrix();
  return LinearOperator(a.space(), a.parity() + b.parity(), std::move(m));
}

}  // namespace qf
