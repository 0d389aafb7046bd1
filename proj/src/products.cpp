#include "qf/products.hpp"

#include <array>

#include "qf/parallel.hpp"

namespace qf {

namespace {

void require_anticommutative(const LieSuperalgebra& g) {
  if (!antisymmetry_violations(g).empty())
    throw PreconditionError("bracket is not graded anti-commutative");
}

const BilinearForm& require_nondegenerate_form(const LieSuperalgebra& g) {
  if (!g.form()) throw PreconditionError("algebra carries no form");
  if (!is_nondegenerate(*g.form()))
    throw PreconditionError("form is degenerate");
  return *g.form();
}

// Solves ω(x, b_w) = rhs_w for x, for every pair (i,j) in parallel.
ProductTable solve_per_pair(const LieSuperalgebra& g,
                            RatVec (*rhs_fn)(const LieSuperalgebra&, std::size_t,
                                             std::size_t)) {
  const auto& omega = *g.form();
  const std::size_t n = g.dim();
  Matrix lhs(n, n);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t k = 0; k < n; ++k) lhs.at(w, k) = omega.value(k, w);
  ProductTable out(g.space());
  std::vector<RatVec> results(n * n);
  parallel_for(n * n, [&](std::size_t idx) {
    std::size_t i = idx / n, j = idx % n;
    auto sol = solve_linear(lhs, rhs_fn(g, i, j));
    if (!sol) throw std::logic_error("per-pair system inconsistent");
    results[idx] = sol->particular;
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_product(i, j, results[i * n + j]);
  return out;
}

RatVec koszul_rhs(const LieSuperalgebra& g, std::size_t i, std::size_t j) {
  const auto& s = g.space();
  const auto& omega = *g.form();
  const auto& br = g.bracket();
  const std::size_t n = g.dim();
  RatVec rhs(n);
  for (std::size_t w = 0; w < n; ++w) {
    RatVec bw = basis_vector(s, w).coords;
    Rational v = omega.eval(br.product(i, j), bw);
    int s2 = sign_of(s->parity(i), s->parity(j)) *
             sign_of(s->parity(w), s->parity(i));
    v -= Rational(s2) * omega.eval(br.product(j, w), basis_vector(s, i).coords);
    int s3 = sign_of(s->parity(j), s->parity(w)) *
             sign_of(s->parity(i), s->parity(w));
    v += Rational(s3) * omega.eval(br.product(w, i), basis_vector(s, j).coords);
    rhs[w] = v / 2;
  }
  return rhs;
}

RatVec natural_rhs(const LieSuperalgebra& g, std::size_t i, std::size_t j) {
  const auto& s = g.space();
  const auto& omega = *g.form();
  const auto& br = g.bracket();
  const std::size_t n = g.dim();
  RatVec rhs(n);
  for (std::size_t w = 0; w < n; ++w) {
    Rational v = omega.eval(br.product(i, j), basis_vector(s, w).coords);
    int sg = sign_of(s->parity(j), s->parity(w));
    v += Rational(sg) * omega.eval(br.product(i, w), basis_vector(s, j).coords);
    rhs[w] = v / 3;
  }
  return rhs;
}

}  // namespace

ProductTable levi_civita_product(const LieSuperalgebra& g, bool verify) {
  require_anticommutative(g);
  require_nondegenerate_form(g);
  ProductTable p = solve_per_pair(g, &koszul_rhs);
  if (verify) {
    if (!(p.commutator_table() == g.bracket()))
      throw std::logic_error("levi_civita: torsion identity failed");
    const auto& omega = *g.form();
    for (std::size_t i = 0; i < g.dim(); ++i) {
      LinearOperator l = p.left_mult(i);
      if (!(adjoint(l, omega) == l))
        throw std::logic_error("levi_civita: left multiplication not form-symmetric");
    }
  }
  return p;
}

ProductTable opposite_product(const ProductTable& p) { return p.opposite_table(); }

ProductTable natural_symplectic_product(const LieSuperalgebra& g, bool verify) {
  if (!g.form()) throw PreconditionError("algebra carries no form");
  // verify=false is the internal fast path for callers that already
  // validated g; the default re-checks the quasi-Frobenius precondition and
  // the defining identities of the result.
  if (verify && !validate(g).empty())
    throw PreconditionError(
        "natural product needs a valid algebra with a closed nondegenerate form");
  if (!verify && !is_nondegenerate(*g.form()))
    throw PreconditionError("form is degenerate");
  ProductTable p = solve_per_pair(g, &natural_rhs);
  if (verify && !verify_symplectic(g, p).empty())
    throw std::logic_error("natural product failed its defining identities");
  return p;
}

std::vector<Violation> verify_symplectic(const LieSuperalgebra& g,
                                         const ProductTable& p) {
  const auto& s = g.space();
  const std::size_t n = g.dim();
  std::vector<Violation> out;
  if (!p.space()->same_basis(*s))
    throw UsageError("verify_symplectic: table on a different space");
  ProductTable comm = p.commutator_table();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (comm.product(i, j) != g.bracket().product(i, j))
        out.push_back({"torsion", "(" + s->name(i) + "," + s->name(j) + ")",
                       "[u,v]_* != [u,v]"});
  if (!g.form()) {
    out.push_back({"omega-antisymmetry", "(form)", "no form present"});
    return out;
  }
  const auto& omega = *g.form();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        Rational lhs = omega.eval(p.product(u, v), basis_vector(s, w).coords);
        Rational rhs = Rational(-sign_of(s->parity(u), s->parity(v))) *
                       omega.eval(basis_vector(s, v).coords, p.product(u, w));
        if (lhs != rhs)
          out.push_back({"omega-antisymmetry",
                         "(" + s->name(u) + "," + s->name(v) + "," + s->name(w) + ")",
                         "omega(u*v,w) != -(-1)^{|u||v|} omega(v,u*w)"});
      }
  return out;
}

Trilinear::Trilinear(SpacePtr space, Parity parity)
    : space_(std::move(space)),
      parity_(parity),
      t_(space_->dim() * space_->dim() * space_->dim()) {}

void Trilinear::set_value(std::size_t i, std::size_t j, std::size_t k,
                          const Rational& v) {
  if (!qf::is_zero(v) &&
      space_->parity(i) + space_->parity(j) + space_->parity(k) != parity_)
    throw UsageError("trilinear entry violates the declared parity");
  t_[(i * space_->dim() + j) * space_->dim() + k] = v;
}

bool Trilinear::is_zero() const {
  for (const auto& q : t_)
    if (!qf::is_zero(q)) return false;
  return true;
}

bool Trilinear::is_graded_symmetric() const {
  const std::size_t n = space_->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        int s12 = sign_of(space_->parity(i), space_->parity(j));
        int s23 = sign_of(space_->parity(j), space_->parity(k));
        if (value(i, j, k) != Rational(s12) * value(j, i, k)) return false;
        if (value(i, j, k) != Rational(s23) * value(i, k, j)) return false;
      }
  return true;
}

ProductTable form_preimage(const Trilinear& t, const BilinearForm& omega) {
  if (!t.space()->same_basis(*omega.space()))
    throw UsageError("form_preimage: spaces differ");
  if (!is_nondegenerate(omega))
    throw PreconditionError("form_preimage needs a nondegenerate form");
  const std::size_t n = t.space()->dim();
  Matrix lhs(n, n);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t k = 0; k < n; ++k) lhs.at(w, k) = omega.value(k, w);
  ProductTable out(t.space());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatVec rhs(n);
      for (std::size_t w = 0; w < n; ++w) rhs[w] = t.value(i, j, w);
      auto sol = solve_linear(lhs, rhs);
      if (!sol) throw std::logic_error("form_preimage system inconsistent");
      out.set_product(i, j, sol->particular);
    }
  return out;
}

ProductTable perturb_symplectic(const LieSuperalgebra& g, const ProductTable& p,
                                const Trilinear& t) {
  const auto& omega = require_nondegenerate_form(g);
  if (t.parity() != omega.parity())
    throw PreconditionError("perturbation data parity differs from the form's");
  if (!t.is_graded_symmetric())
    throw PreconditionError("perturbation data is not graded-symmetric");
  if (!verify_symplectic(g, p).empty())
    throw PreconditionError("base table is not a symplectic product");
  ProductTable out = p + form_preimage(t, omega);
  if (!verify_symplectic(g, out).empty())
    throw std::logic_error("perturbed product failed the symplectic axioms");
  return out;
}

Curvature curvature(const LieSuperalgebra& g, const ProductTable& p) {
  const std::size_t n = g.dim();
  const auto& s = g.space();
  Curvature r{g.space(), {}};
  std::vector<LinearOperator> lefts;
  lefts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) lefts.push_back(p.left_mult(i));
  std::vector<Matrix> mats(n * n);
  parallel_for(n * n, [&](std::size_t idx) {
    std::size_t i = idx / n, j = idx % n;
    Matrix acc(n, n);
    RatVec br = g.bracket().product(i, j);
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(br[k])) acc = acc + lefts[k].matrix().scaled(br[k]);
    int sg = sign_of(s->parity(i), s->parity(j));
    acc = acc - lefts[i].matrix() * lefts[j].matrix() +
          (lefts[j].matrix() * lefts[i].matrix()).scaled(Rational(sg));
    mats[idx] = std::move(acc);
  });
  r.ops.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r.ops.emplace_back(s, s->parity(i) + s->parity(j),
                         std::move(mats[i * n + j]));
  // 𝓡(u,v) = −(−1)^{|u||v|} 𝓡(v,u) follows from the formula; assert it.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int sg = sign_of(s->parity(i), s->parity(j));
      if (!(r.at(i, j).matrix() == r.at(j, i).matrix().scaled(Rational(-sg))))
        throw std::logic_error("curvature lost graded anti-symmetry");
    }
  return r;
}

bool Curvature::is_zero() const {
  for (const auto& op : ops)
    if (!op.is_zero()) return false;
  return true;
}

namespace {

template <bool Left>
std::vector<Violation> symmetry_violations(const ProductTable& p) {
  const auto& s = p.space();
  const std::size_t n = p.dim();
  std::vector<std::optional<Violation>> slots(n * n * n);
  parallel_for(n * n * n, [&](std::size_t idx) {
    std::size_t a = idx / (n * n), b = (idx / n) % n, c = idx % n;
    auto assoc = [&](std::size_t x, std::size_t y, std::size_t z) {
      return rat_vec_sub(p.apply(p.product(x, y), basis_vector(s, z).coords),
                         p.apply(basis_vector(s, x).coords, p.product(y, z)));
    };
    RatVec lhs = assoc(a, b, c);
    RatVec rhs;
    int sg;
    if constexpr (Left) {
      sg = sign_of(s->parity(a), s->parity(b));
      rhs = assoc(b, a, c);
    } else {
      sg = sign_of(s->parity(b), s->parity(c));
      rhs = assoc(a, c, b);
    }
    if (lhs != rat_vec_scale(Rational(sg), rhs))
      slots[idx] =
          Violation{Left ? "left-symmetry" : "right-symmetry",
                    "(" + s->name(a) + "," + s->name(b) + "," + s->name(c) + ")",
                    "associator identity failed"};
  });
  std::vector<Violation> out;
  for (auto& v : slots)
    if (v) out.push_back(std::move(*v));
  return out;
}

}  // namespace

std::vector<Violation> left_symmetry_violations(const ProductTable& p) {
  return symmetry_violations<true>(p);
}

std::vector<Violation> right_symmetry_violations(const ProductTable& p) {
  return symmetry_violations<false>(p);
}

bool is_left_symmetric(const ProductTable& p) {
  return left_symmetry_violations(p).empty();
}

bool is_right_symmetric(const ProductTable& p) {
  return right_symmetry_violations(p).empty();
}

bool is_flat(const LieSuperalgebra& g) {
  if (!is_quasi_frobenius(g))
    throw PreconditionError("flatness is defined for quasi-Frobenius algebras");
  ProductTable star = natural_symplectic_product(g, false);
  return curvature(g, star).is_zero();
}

bool flat_lr_identity_holds(const LieSuperalgebra& g, const ProductTable& p) {
  const auto& s = g.space();
  const std::size_t n = g.dim();
  std::vector<LinearOperator> lefts, rights;
  for (std::size_t i = 0; i < n; ++i) {
    lefts.push_back(p.left_mult(i));
    rights.push_back(p.right_mult(i));
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      Parity puv = s->parity(u) + s->parity(v);
      RatVec uv = p.product(u, v);
      LinearOperator r_uv = LinearOperator::zero(s, puv);
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(uv[k])) r_uv = r_uv + rights[k].scaled(uv[k]);
      int sg = sign_of(s->parity(u), s->parity(v));
      Matrix lhs =
          r_uv.matrix() - (rights[v].matrix() * rights[u].matrix()).scaled(Rational(sg));
      Matrix rhs = LinearOperator::super_commutator(lefts[u], rights[v]).matrix();
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool lr_identities_hold(const LieSuperalgebra& g, const ProductTable& natural) {
  const auto& omega = require_nondegenerate_form(g);
  const std::size_t n = g.dim();
  Rational third(1, 3);
  for (std::size_t u = 0; u < n; ++u) {
    LinearOperator ad_u = g.ad(u);
    LinearOperator ad_star = adjoint(ad_u, omega);
    LinearOperator l = natural.left_mult(u);
    LinearOperator r = natural.right_mult(u);
    if (!((ad_u - ad_star).scaled(third) == l)) return false;
    if (!((ad_u.scaled(2) + ad_star).scaled(-third) == r)) return false;
  }
  return true;
}

FlatPerpReport flat_perp_properties(const LieSuperalgebra& g) {
  if (!is_flat(g))
    throw PreconditionError("flat_perp_properties needs a flat algebra");
  const auto& omega = *g.form();
  const std::size_t n = g.dim();
  ProductTable star = natural_symplectic_product(g, false);
  auto derived = derived_subalgebra(g);
  auto perp = homogeneous_basis(orthogonal_complement(derived, omega), g.space());

  FlatPerpReport rep;
  rep.lr_proportional = true;
  rep.ad_products_vanish = true;
  rep.bracket_into_left_normalizer = true;

  Rational two_thirds(2, 3);
  for (const auto& ucoords : perp) {
    Vec u(g.space(), ucoords);
    LinearOperator l = star.left_mult(u);
    LinearOperator r = star.right_mult(u);
    LinearOperator ad_u = g.ad(u);
    if (!(l == r.scaled(-2)) || !(l == ad_u.scaled(two_thirds)))
      rep.lr_proportional = false;
  }
  for (const auto& ucoords : perp)
    for (const auto& vcoords : perp) {
      Vec u(g.space(), ucoords), v(g.space(), vcoords);
      if (!(g.ad(u).compose(g.ad(v)).is_zero())) rep.ad_products_vanish = false;
    }

  Normalizers norm = normalizers(g, star);
  std::vector<RatVec> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(basis_vector(g.space(), i).coords);
  auto bracket_span = subspace_bracket(g, all, perp);
  rep.bracket_into_left_normalizer =
      subspace_contains_all(norm.left, bracket_span, n);
  return rep;
}

}  // namespace qf
