#ifndef QF_EXTENSIONS_HPP
#define QF_EXTENSIONS_HPP

#include <string>
#include <vector>

#include "qf/products.hpp"

namespace qf {

/// The four ways of adjoining the dual pair (d, e) to a flat seed. The
/// first word is the parity of d (and of ξ); the second names the seed
/// form. Basis parities added: even-orthosymplectic (d,e even),
/// odd-orthosymplectic (d,e odd), even-periplectic (d even, e odd),
/// odd-periplectic (d odd, e even).
enum class ExtVariant {
  even_orthosymplectic,
  odd_orthosymplectic,
  even_periplectic,
  odd_periplectic,
};

Parity variant_d_parity(ExtVariant v);
Parity variant_e_parity(ExtVariant v);
Parity variant_form_parity(ExtVariant v);
const char* variant_name(ExtVariant v);
std::optional<ExtVariant> parse_variant(const std::string& name);

struct ExtensionSpec {
  LieSuperalgebra seed;  // flat quasi-Frobenius
  LinearOperator xi;     // parity = variant_d_parity
  Vec b0;                // even homogeneous element of the seed
  ExtVariant variant;
  std::string d_name = "d";
  std::string e_name = "e";
};

/// Checks the variant's admissibility system on all homogeneous basis
/// pairs; ⋆ is the seed's natural product and ξ* its form-adjoint.
/// Violations name the clause and the pair. Parity mismatches between the
/// spec fields throw.
std::vector<Violation> check_admissible(const ExtensionSpec& spec);

struct DoubleExtension {
  LieSuperalgebra algebra;        // basis order (d, seed..., e)
  ProductTable predicted_product; // the closed-form natural product
};

/// Builds 𝕂d ⊕ seed ⊕ 𝕂e with the variant's brackets and form. Refuses
/// non-admissible specs. Asserts on the result: validates as
/// quasi-Frobenius of the right parity, natural product equals the
/// predicted table, and the extension is flat.
DoubleExtension double_extend(const ExtensionSpec& spec);

/// Quotient I⊥/I for I = 𝕂a, realized on a homogeneous complement basis.
/// Pre: g flat quasi-Frobenius, a homogeneous nonzero and central isotropic
/// (a ∈ Z(g) ∩ Z(g)⊥).
LieSuperalgebra reduce(const LieSuperalgebra& g, const Vec& a);

struct Decomposition {
  ExtensionSpec spec;
  /// Adapted basis (d, seed..., e) as vectors in g's original coordinates;
  /// double_extend(spec) matches g rewritten in this basis.
  std::vector<RatVec> adapted_basis;
};

/// Inverse of double_extend for flat non-abelian algebras: picks a
/// homogeneous e in Z(g) ∩ Z(g)⊥, the dual d with ω(e,d)=1, and reads off
/// (seed, ξ, b₀, variant) from the natural product.
Decomposition decompose(const LieSuperalgebra& g);

/// Scalar-valued bilinear data (no symmetry constraints).
struct ScalarBilinear {
  SpacePtr space;
  Parity parity;
  Matrix values;  // values(i,j) = μ(b_i, b_j)

  Rational eval(const RatVec& u, const RatVec& v) const;
};

/// Condition for the one-dimensional central extension of a left-symmetric
/// product to stay left-symmetric:
///   μ(L_u v, w) − μ(u, L_v w) = (−1)^{|u||v|}(μ(L_v u, w) − μ(v, L_u w)).
bool check_central_extension(const ProductTable& product, const ScalarBilinear& mu);

/// The almost-semi-direct-product compatibility system for (D, ξ, b₀, λ)
/// over a left-symmetric product. λ must be 0 when d (= parity of D, ξ)
/// is odd.
std::vector<Violation> check_semidirect_context(const ProductTable& product,
                                                const LinearOperator& d_map,
                                                const LinearOperator& xi,
                                                const Vec& b0,
                                                const Rational& lambda);

}  // namespace qf

#endif
