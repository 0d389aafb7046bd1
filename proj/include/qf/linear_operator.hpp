#ifndef QF_LINEAR_OPERATOR_HPP
#define QF_LINEAR_OPERATOR_HPP

#include <string>

#include "qf/superspace.hpp"

namespace qf {

/// Homogeneous linear map on a superspace; column j holds the image of
/// basis vector j. Entry (i,j) may be nonzero only when
/// parity(b_i) = parity(b_j) + parity(op).
class LinearOperator {
 public:
  LinearOperator(SpacePtr space, Parity parity, Matrix matrix);

  static LinearOperator zero(const SpacePtr& s, Parity p);
  static LinearOperator identity(const SpacePtr& s);

  const SpacePtr& space() const { return space_; }
  Parity parity() const { return parity_; }
  const Matrix& matrix() const { return matrix_; }

  Vec apply(const Vec& v) const;
  RatVec apply(const RatVec& coords) const;

  LinearOperator compose(const LinearOperator& inner) const;
  LinearOperator operator+(const LinearOperator& rhs) const;
  LinearOperator operator-(const LinearOperator& rhs) const;
  LinearOperator scaled(const Rational& c) const;
  bool operator==(const LinearOperator& rhs) const {
    return parity_ == rhs.parity_ && matrix_ == rhs.matrix_;
  }

  bool is_zero() const { return matrix_.is_zero(); }
  bool is_nilpotent() const;
  Rational trace() const;

  /// Super-commutator [A,B] = A∘B − (−1)^{|A||B|} B∘A.
  static LinearOperator super_commutator(const LinearOperator& a,
                                         const LinearOperator& b);
  /// Anti-commutator A∘B + B∘A.
  static LinearOperator anti_commutator(const LinearOperator& a,
                                        const LinearOperator& b);

 private:
  SpacePtr space_;
  Parity parity_;
  Matrix matrix_;
};

}  // namespace qf

#endif
