#ifndef QF_LIE_SUPERALGEBRA_HPP
#define QF_LIE_SUPERALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "qf/bilinear_form.hpp"
#include "qf/product_table.hpp"
#include "qf/subspace.hpp"

namespace qf {

struct Violation {
  std::string rule;    // e.g. "jacobi", "closedness", "torsion"
  std::string where;   // offending basis pair/triple, e.g. "(x1,x2,x3)"
  std::string detail;  // optional value dump

  std::string to_string() const;
};

/// Bracket entry for construction: [b_i, b_j] = coords, given for i <= j
/// (plus odd-odd diagonals); the transposed entry is filled by graded
/// anti-symmetry.
struct BracketEntry {
  std::size_t i, j;
  RatVec coords;
};

ProductTable make_bracket(const SpacePtr& space,
                          const std::vector<BracketEntry>& entries);

class LieSuperalgebra {
 public:
  LieSuperalgebra(SpacePtr space, ProductTable bracket,
                  std::optional<BilinearForm> form);

  const SpacePtr& space() const { return space_; }
  const ProductTable& bracket() const { return bracket_; }
  const std::optional<BilinearForm>& form() const { return form_; }
  std::size_t dim() const { return space_->dim(); }

  RatVec bracket_of(const RatVec& u, const RatVec& v) const {
    return bracket_.apply(u, v);
  }
  LinearOperator ad(std::size_t i) const { return bracket_.left_mult(i); }
  LinearOperator ad(const Vec& u) const { return bracket_.left_mult(u); }

  bool is_abelian() const { return bracket_.is_zero(); }

 private:
  SpacePtr space_;
  ProductTable bracket_;
  std::optional<BilinearForm> form_;
};

/// Checks every axiom: parity grading, graded anti-symmetry, super Jacobi,
/// and (when a form is present) nondegeneracy plus closedness. Violations
/// are data, not errors.
std::vector<Violation> validate(const LieSuperalgebra& g);

/// The individual scan kernels behind validate(); exposed for the serial
/// reference comparison and the benchmark.
std::vector<Violation> antisymmetry_violations(const LieSuperalgebra& g);
std::vector<Violation> jacobi_violations(const LieSuperalgebra& g);
std::vector<Violation> closedness_violations(const LieSuperalgebra& g);

bool is_quasi_frobenius(const LieSuperalgebra& g);

std::vector<RatVec> center(const LieSuperalgebra& g);
std::vector<RatVec> derived_subalgebra(const LieSuperalgebra& g);

/// Span of [a, b] over basis elements a of A and b of B.
std::vector<RatVec> subspace_bracket(const LieSuperalgebra& g,
                                     const std::vector<RatVec>& a,
                                     const std::vector<RatVec>& b);

struct StructuralReport {
  std::vector<RatVec> center_basis;
  std::vector<RatVec> derived_basis;
  std::vector<std::size_t> lcs_dims;
  std::vector<std::size_t> ds_dims;
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::optional<bool> center_degenerate;
  std::optional<bool> derived_degenerate;
};

StructuralReport series(const LieSuperalgebra& g);

struct Normalizers {
  std::vector<RatVec> left;
  std::vector<RatVec> right;
  std::vector<RatVec> two_sided;
};

Normalizers normalizers(const LieSuperalgebra& g, const ProductTable& p);

/// Is span(S) degenerate for the given form, i.e. S ∩ S⊥ ≠ {0}?
bool subspace_degenerate(const std::vector<RatVec>& s, const BilinearForm& omega);

/// Re-expresses g in a new basis (vectors given in old coordinates; must be
/// homogeneous and independent). Form carried along when present.
LieSuperalgebra change_of_basis(const LieSuperalgebra& g,
                                const std::vector<std::string>& new_names,
                                const std::vector<RatVec>& new_basis);

}  // namespace qf

#endif
