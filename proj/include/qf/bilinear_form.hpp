#ifndef QF_BILINEAR_FORM_HPP
#define QF_BILINEAR_FORM_HPP

#include <vector>

#include "qf/linear_operator.hpp"
#include "qf/superspace.hpp"

namespace qf {

/// Homogeneous anti-symmetric bilinear form, stored as raw values
/// values(i,j) = ω(b_i, b_j).
///
/// Invariants checked at construction:
///   ω(b_i,b_j) = −(−1)^{|b_i||b_j|} ω(b_j,b_i)
///   ω(b_i,b_j) ≠ 0 only if |b_i| + |b_j| = parity of the form.
class BilinearForm {
 public:
  BilinearForm(SpacePtr space, Parity parity, Matrix values);

  static BilinearForm zero(const SpacePtr& s, Parity p);

  const SpacePtr& space() const { return space_; }
  Parity parity() const { return parity_; }
  const Matrix& values() const { return values_; }
  const Rational& value(std::size_t i, std::size_t j) const {
    return values_.at(i, j);
  }

  Rational eval(const RatVec& u, const RatVec& v) const;
  Rational eval(const Vec& u, const Vec& v) const;

 private:
  SpacePtr space_;
  Parity parity_;
  Matrix values_;
};

struct WedgeTerm {
  std::size_t i, j;
  Rational coeff;
};

/// Builds Σ c · b_i*∧b_j* with the graded pairing convention
/// ⟨x*⊗y*, u⊗v⟩ = (−1)^{|y||u|} x*(u) y*(v), which makes a single term
/// contribute ω(b_i,b_j) = c·(−1)^{|b_i||b_j|} and ω(b_j,b_i) = −c;
/// an odd-odd diagonal term b_i*∧b_i* contributes ω(b_i,b_i) = −2c.
BilinearForm wedge_form(const std::vector<WedgeTerm>& terms, const SpacePtr& space,
                        Parity parity);

/// True iff the values matrix is invertible. A nondegenerate odd form on a
/// space with dim_even ≠ dim_odd is impossible; that case throws instead of
/// returning.
bool is_nondegenerate(const BilinearForm& omega);

/// The unique f* with ω(f(v),w) = (−1)^{|f||v|} ω(v, f*(w)), computed
/// column-by-column from the defining relation. Requires ω nondegenerate.
LinearOperator adjoint(const LinearOperator& f, const BilinearForm& omega);

/// Basis of {v : ω(u,v) = 0 for all u in span(U)}.
std::vector<RatVec> orthogonal_complement(const std::vector<Vec>& u_gens,
                                          const BilinearForm& omega);
std::vector<RatVec> orthogonal_complement(const std::vector<RatVec>& u_gens,
                                          const BilinearForm& omega);

}  // namespace qf

#endif
