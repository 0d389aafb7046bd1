#ifndef QF_PRODUCTS_HPP
#define QF_PRODUCTS_HPP

#include <vector>

#include "qf/lie_superalgebra.hpp"

namespace qf {

/// The unique product with [u,v]_• = [u,v] and form-symmetric left
/// multiplications, built per basis pair from the graded Koszul relation
///   2ω(u•v,w) = ω([u,v],w) − (−1)^{|u||v|+|w||u|}ω([v,w],u)
///             + (−1)^{|v||w|+|u||w|}ω([w,u],v).
/// Needs an anti-commutative bracket and a nondegenerate form; the Jacobi
/// identity is not required. Both defining identities are re-asserted on
/// the result when `verify` is set.
ProductTable levi_civita_product(const LieSuperalgebra& g, bool verify = true);

/// u ∘ v = −(−1)^{|u||v|} v ∗ u.
ProductTable opposite_product(const ProductTable& p);

/// The unique symplectic product expressible in bracket and form alone:
///   ω(u⋆v,w) = ⅓(ω([u,v],w) + (−1)^{|v||w|} ω([u,w],v)).
/// Requires a closed nondegenerate form (validate(g) must be clean).
ProductTable natural_symplectic_product(const LieSuperalgebra& g,
                                        bool verify = true);

/// Violations of the two symplectic-product axioms: [u,v]_⋆ = [u,v]
/// ("torsion") and ω(u⋆v,w) = −(−1)^{|u||v|}ω(v,u⋆w) ("omega-antisymmetry").
std::vector<Violation> verify_symplectic(const LieSuperalgebra& g,
                                         const ProductTable& p);

/// Graded-symmetric trilinear scalar data of homogeneous parity.
class Trilinear {
 public:
  Trilinear(SpacePtr space, Parity parity);

  const SpacePtr& space() const { return space_; }
  Parity parity() const { return parity_; }
  const Rational& value(std::size_t i, std::size_t j, std::size_t k) const {
    return t_[(i * space_->dim() + j) * space_->dim() + k];
  }
  void set_value(std::size_t i, std::size_t j, std::size_t k, const Rational& v);

  bool is_zero() const;
  /// T(u,v,w) = (−1)^{|u||v|}T(v,u,w) and T(u,v,w) = (−1)^{|v||w|}T(u,w,v).
  bool is_graded_symmetric() const;

 private:
  SpacePtr space_;
  Parity parity_;
  std::vector<Rational> t_;
};

/// The bilinear map f_T with ω(f_T(u,v), w) = T(u,v,w) for all w.
ProductTable form_preimage(const Trilinear& t, const BilinearForm& omega);

/// p + f_T; the result is again symplectic. T must be graded-symmetric of
/// the form's parity and p must verify.
ProductTable perturb_symplectic(const LieSuperalgebra& g, const ProductTable& p,
                                const Trilinear& t);

/// 𝓡(u,v) = L_{[u,v]} − [L_u, L_v] with the operator super-commutator.
struct Curvature {
  SpacePtr space;
  std::vector<LinearOperator> ops;  // row-major over basis pairs

  const LinearOperator& at(std::size_t i, std::size_t j) const {
    return ops[i * space->dim() + j];
  }
  bool is_zero() const;
};

Curvature curvature(const LieSuperalgebra& g, const ProductTable& p);

bool is_left_symmetric(const ProductTable& p);
bool is_right_symmetric(const ProductTable& p);

/// Flatness of the natural product (vanishing curvature). Pre: g validates
/// as quasi-Frobenius.
bool is_flat(const LieSuperalgebra& g);

/// The operator identity equivalent to vanishing curvature:
///   R_{u⋆v} − (−1)^{|u||v|} R_v∘R_u = [L_u, R_v]  on all basis pairs.
bool flat_lr_identity_holds(const LieSuperalgebra& g, const ProductTable& p);

/// L_u = ⅓(ad_u − ad_u*), R_u = −⅓(2 ad_u + ad_u*) for the natural product;
/// checked for every basis u.
bool lr_identities_hold(const LieSuperalgebra& g, const ProductTable& natural);

struct FlatPerpReport {
  bool lr_proportional = false;   // L_u = −2R_u = ⅔ ad_u on [g,g]⊥
  bool ad_products_vanish = false;  // ad_u ∘ ad_v = 0 on [g,g]⊥
  bool bracket_into_left_normalizer = false;  // [g,[g,g]⊥] ⊆ N_ℓ(g,⋆)
};

FlatPerpReport flat_perp_properties(const LieSuperalgebra& g);

/// Left/right-associator scans exposed for the serial reference comparison
/// and the benchmark: offending triples instead of a bare bool.
std::vector<Violation> left_symmetry_violations(const ProductTable& p);
std::vector<Violation> right_symmetry_violations(const ProductTable& p);

}  // namespace qf

#endif
