#ifndef QF_PRODUCT_TABLE_HPP
#define QF_PRODUCT_TABLE_HPP

#include <vector>

#include "qf/linear_operator.hpp"
#include "qf/superspace.hpp"

namespace qf {

/// Structure constants of a bilinear product: entry (i,j,k) is the
/// coefficient of b_k in b_i ∗ b_j. Entries must respect the parity
/// grading |b_k| = |b_i| + |b_j|.
class ProductTable {
 public:
  explicit ProductTable(SpacePtr space);
  ProductTable(SpacePtr space, std::vector<Rational> constants);

  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return space_->dim(); }

  const Rational& coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return t_[(i * dim() + j) * dim() + k];
  }

  /// Coordinates of b_i ∗ b_j.
  RatVec product(std::size_t i, std::size_t j) const;

  /// Replaces b_i ∗ b_j (validates the parity grading).
  void set_product(std::size_t i, std::size_t j, const RatVec& coords);

  /// Bilinear evaluation on coordinate vectors.
  RatVec apply(const RatVec& u, const RatVec& v) const;
  Vec apply(const Vec& u, const Vec& v) const;

  /// L_u for a basis vector: v ↦ b_i ∗ v.
  LinearOperator left_mult(std::size_t i) const;
  /// R_u for a basis vector: v ↦ (−1)^{|b_i||v|} v ∗ b_i.
  LinearOperator right_mult(std::size_t i) const;
  /// Same, extended linearly to a homogeneous vector.
  LinearOperator left_mult(const Vec& u) const;
  LinearOperator right_mult(const Vec& u) const;

  /// [u,v]_∗ = u∗v − (−1)^{|u||v|} v∗u as a table.
  ProductTable commutator_table() const;
  /// u ∘ v = −(−1)^{|u||v|} v ∗ u.
  ProductTable opposite_table() const;

  ProductTable operator+(const ProductTable& rhs) const;
  bool operator==(const ProductTable& rhs) const { return t_ == rhs.t_; }
  bool is_zero() const;

  const std::vector<Rational>& raw() const { return t_; }

 private:
  void check_grading() const;

  SpacePtr space_;
  std::vector<Rational> t_;
};

}  // namespace qf

#endif
