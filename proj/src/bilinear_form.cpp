#include "qf/bilinear_form.hpp"

namespace qf {

BilinearForm::BilinearForm(SpacePtr space, Parity parity, Matrix values)
    : space_(std::move(space)), parity_(parity), values_(std::move(values)) {
  const std::size_t n = space_->dim();
  if (values_.rows() != n || values_.cols() != n)
    throw UsageError("form matrix has wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = values_.at(i, j);
      if (is_zero(v)) continue;
      if (space_->parity(i) + space_->parity(j) != parity_)
        throw UsageError("form entry (" + space_->name(i) + "," + space_->name(j) +
                         ") violates the declared parity");
      int s = sign_of(space_->parity(i), space_->parity(j));
      if (v != -Rational(s) * values_.at(j, i))
        throw UsageError("form entry (" + space_->name(i) + "," + space_->name(j) +
                         ") breaks super anti-symmetry");
    }
}

BilinearForm BilinearForm::zero(const SpacePtr& s, Parity p) {
  return BilinearForm(s, p, Matrix(s->dim(), s->dim()));
}

Rational BilinearForm::eval(const RatVec& u, const RatVec& v) const {
  if (u.size() != space_->dim() || v.size() != space_->dim())
    throw UsageError("form evaluated on wrong-sized vectors");
  Rational out = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!is_zero(values_.at(i, j)) && !is_zero(v[j]))
        out += u[i] * values_.at(i, j) * v[j];
  }
  return out;
}

Rational BilinearForm::eval(const Vec& u, const Vec& v) const {
  if (!u.space->same_basis(*space_) || !v.space->same_basis(*space_))
    throw UsageError("form evaluated across spaces");
  return eval(u.coords, v.coords);
}

BilinearForm wedge_form(const std::vector<WedgeTerm>& terms, const SpacePtr& space,
                        Parity parity) {
  const std::size_t n = space->dim();
  Matrix m(n, n);
  for (const auto& t : terms) {
    if (t.i >= n || t.j >= n) throw UsageError("wedge term index out of range");
    if (space->parity(t.i) + space->parity(t.j) != parity)
      throw UsageError("wedge term (" + space->name(t.i) + "," + space->name(t.j) +
                       ") is inconsistent with the declared form parity");
    int s = sign_of(space->parity(t.i), space->parity(t.j));
    m.at(t.i, t.j) += Rational(s) * t.coeff;
    m.at(t.j, t.i) += -t.coeff;
  }
  return BilinearForm(space, parity, std::move(m));
}

bool is_nondegenerate(const BilinearForm& omega) {
  bool ok = omega.values().rank() == omega.space()->dim();
  if (ok && omega.parity() == Parity::odd && omega.space()->dim() > 0 &&
      omega.space()->dim_even() != omega.space()->dim_odd())
    throw std::logic_error(
        "nondegenerate odd form on a space with dim_even != dim_odd");
  return ok;
}

LinearOperator adjoint(const LinearOperator& f, const BilinearForm& omega) {
  if (!f.space()->same_basis(*omega.space()))
    throw UsageError("adjoint: operator and form live on different spaces");
  if (!is_nondegenerate(omega))
    throw PreconditionError("adjoint requires a nondegenerate form");
  const auto& space = f.space();
  const std::size_t n = space->dim();
  // Row i of the system for x = f*(b_j):  ω(b_i, x) = (−1)^{|f||b_i|} ω(f(b_i), b_j).
  Matrix lhs = omega.values();
  Matrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVec rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational v = omega.eval(f.matrix().column(i), basis_vector(space, j).coords);
      rhs[i] = Rational(sign_of(f.parity(), space->parity(i))) * v;
    }
    auto sol = solve_linear(lhs, rhs);
    if (!sol) throw std::logic_error("adjoint system inconsistent");
    for (std::size_t i = 0; i < n; ++i) out.at(i, j) = sol->particular[i];
  }
  return LinearOperator(space, f.parity(), std::move(out));
}

std::vector<RatVec> orthogonal_complement(const std::vector<RatVec>& u_gens,
                                          const BilinearForm& omega) {
  const std::size_t n = omega.space()->dim();
  Matrix constraints(u_gens.size(), n);
  for (std::size_t r = 0; r < u_gens.size(); ++r) {
    if (u_gens[r].size() != n)
      throw UsageError("orthogonal_complement: vector from a different space");
    for (std::size_t k = 0; k < n; ++k) {
      Rational c = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (!is_zero(u_gens[r][i])) c += u_gens[r][i] * omega.value(i, k);
      constraints.at(r, k) = c;
    }
  }
  return constraints.kernel_basis();
}

std::vector<RatVec> orthogonal_complement(const std::vector<Vec>& u_gens,
                                          const BilinearForm& omega) {
  std::vector<RatVec> raw;
  raw.reserve(u_gens.size());
  for (const auto& u : u_gens) {
    if (!u.space->same_basis(*omega.space()))
      throw UsageError("orthogonal_complement: vector from a different space");
    raw.push_back(u.coords);
  }
  return orthogonal_complement(raw, omega);
}

}  // namespace qf
