#include "qf/extensions.hpp"

namespace qf {

Parity variant_d_parity(ExtVariant v) {
  return (v == ExtVariant::even_orthosymplectic || v == ExtVariant::even_periplectic)
             ? Parity::even
             : Parity::odd;
}

Parity variant_e_parity(ExtVariant v) {
  switch (v) {
    case ExtVariant::even_orthosymplectic: return Parity::even;
    case ExtVariant::odd_orthosymplectic: return Parity::odd;
    case ExtVariant::even_periplectic: return Parity::odd;
    case ExtVariant::odd_periplectic: return Parity::even;
  }
  throw UsageError("unknown variant");
}

Parity variant_form_parity(ExtVariant v) {
  return (v == ExtVariant::even_orthosymplectic || v == ExtVariant::odd_orthosymplectic)
             ? Parity::even
             : Parity::odd;
}

const char* variant_name(ExtVariant v) {
  switch (v) {
    case ExtVariant::even_orthosymplectic: return "even-orthosymplectic";
    case ExtVariant::odd_orthosymplectic: return "odd-orthosymplectic";
    case ExtVariant::even_periplectic: return "even-periplectic";
    case ExtVariant::odd_periplectic: return "odd-periplectic";
  }
  throw UsageError("unknown variant");
}

std::optional<ExtVariant> parse_variant(const std::string& name) {
  for (ExtVariant v :
       {ExtVariant::even_orthosymplectic, ExtVariant::odd_orthosymplectic,
        ExtVariant::even_periplectic, ExtVariant::odd_periplectic})
    if (name == variant_name(v)) return v;
  return std::nullopt;
}

namespace {

struct SpecContext {
  const ExtensionSpec& spec;
  ProductTable star;        // seed natural product
  LinearOperator xi_star;   // adjoint of ξ
  LinearOperator r_b0;      // R⋆_{b₀}
  LinearOperator l_b0;      // L⋆_{b₀}
};

void check_spec_shapes(const ExtensionSpec& spec) {
  const auto& seed = spec.seed;
  if (!seed.form()) throw PreconditionError("extension seed carries no form");
  if (seed.form()->parity() != variant_form_parity(spec.variant))
    throw PreconditionError("seed form parity does not match the variant");
  if (!spec.xi.space()->same_basis(*seed.space()))
    throw PreconditionError("xi lives on a different space than the seed");
  if (spec.xi.parity() != variant_d_parity(spec.variant))
    throw PreconditionError("xi parity does not match the variant");
  if (!spec.b0.space->same_basis(*seed.space()))
    throw PreconditionError("b0 lives on a different space than the seed");
  if (!spec.b0.is_homogeneous() || (!spec.b0.is_zero() && spec.b0.parity() != Parity::even))
    throw PreconditionError("b0 must be an even homogeneous element");
  if (!validate(seed).empty())
    throw PreconditionError("extension seed does not validate");
  if (!is_flat(seed)) throw PreconditionError("extension seed is not flat");
}

SpecContext make_context(const ExtensionSpec& spec) {
  check_spec_shapes(spec);
  ProductTable star = natural_symplectic_product(spec.seed, false);
  LinearOperator xi_star = adjoint(spec.xi, *spec.seed.form());
  LinearOperator r_b0 = star.right_mult(spec.b0);
  LinearOperator l_b0 = star.left_mult(spec.b0);
  return SpecContext{spec, std::move(star), std::move(xi_star), std::move(r_b0),
                     std::move(l_b0)};
}

void check_operator_equal(std::vector<Violation>& out, const std::string& clause,
                          const LinearOperator& lhs, const LinearOperator& rhs) {
  if (!(lhs.matrix() == rhs.matrix()))
    out.push_back({clause, "(operator)", "operator identity failed"});
}

// ξ([u,v]) = L⋆_u ξ(v) − (−1)^{|u||v|} L⋆_v ξ(u), shared by all variants.
void check_xi_bracket(std::vector<Violation>& out, const SpecContext& c) {
  const auto& s = c.spec.seed.space();
  const std::size_t n = s->dim();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      RatVec lhs = c.spec.xi.apply(c.spec.seed.bracket().product(u, v));
      RatVec xv = c.spec.xi.matrix().column(v);
      RatVec xu = c.spec.xi.matrix().column(u);
      int sg = sign_of(s->parity(u), s->parity(v));
      RatVec rhs =
          rat_vec_sub(c.star.apply(basis_vector(s, u).coords, xv),
                      rat_vec_scale(Rational(sg),
                                    c.star.apply(basis_vector(s, v).coords, xu)));
      if (lhs != rhs)
        out.push_back({"xi-bracket-compat",
                       "(" + s->name(u) + "," + s->name(v) + ")",
                       "xi([u,v]) != L_u(xi(v)) - (-1)^{|u||v|} L_v(xi(u))"});
    }
}

std::vector<Violation> check_even_system(const SpecContext& c) {
  std::vector<Violation> out;
  check_xi_bracket(out, c);
  const auto& s = c.spec.seed.space();
  const std::size_t n = s->dim();
  const LinearOperator& xi = c.spec.xi;
  LinearOperator d_map = c.xi_star - xi;

  // ξ*∘ξ = ⅓(R_{b₀} + R_{b₀}*)
  LinearOperator rb0_star = adjoint(c.r_b0, *c.spec.seed.form());
  check_operator_equal(out, "xi-star-xi", c.xi_star.compose(xi),
                       (c.r_b0 + rb0_star).scaled(Rational(1, 3)));

  // D(u⋆v) = D(u)⋆v + u⋆D(v) − ξ(u)⋆v
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      RatVec uv = c.star.product(u, v);
      RatVec lhs = d_map.apply(uv);
      RatVec bu = basis_vector(s, u).coords, bv = basis_vector(s, v).coords;
      RatVec rhs = c.star.apply(d_map.matrix().column(u), bv);
      rhs = rat_vec_add(rhs, c.star.apply(bu, d_map.matrix().column(v)));
      rhs = rat_vec_sub(rhs, c.star.apply(xi.matrix().column(u), bv));
      if (lhs != rhs)
        out.push_back({"D-Leibniz", "(" + s->name(u) + "," + s->name(v) + ")",
                       "D(u*v) != D(u)*v + u*D(v) - xi(u)*v"});
    }

  // [ξ,ξ*] = ξ² − ⅓R_{b₀}
  check_operator_equal(out, "xi-commutator",
                       xi.compose(c.xi_star) - c.xi_star.compose(xi),
                       xi.compose(xi) - c.r_b0.scaled(Rational(1, 3)));

  // b₀ ∈ ker D
  if (!rat_vec_is_zero(d_map.apply(c.spec.b0.coords)))
    out.push_back({"b0-kernel", "(b0)", "D(b0) != 0"});
  return out;
}

// Proof-level Leibniz relation shared by the two odd variants; op is ξ*+ξ
// (orthosymplectic, sign −1 on the first term) or ξ*−ξ (periplectic, +1).
void check_odd_leibniz(std::vector<Violation>& out, const SpecContext& c,
                       const LinearOperator& op, int first_sign) {
  const auto& s = c.spec.seed.space();
  const std::size_t n = s->dim();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      int su = s->parity(u) == Parity::odd ? -1 : 1;
      int suv = su * (s->parity(v) == Parity::odd ? -1 : 1);
      RatVec bu = basis_vector(s, u).coords, bv = basis_vector(s, v).coords;
      RatVec lhs = rat_vec_scale(Rational(first_sign * su),
                                 c.star.apply(op.matrix().column(u), bv));
      lhs = rat_vec_add(lhs, rat_vec_scale(Rational(-first_sign * suv),
                                           op.apply(c.star.product(u, v))));
      RatVec rhs = rat_vec_scale(Rational(su),
                                 c.star.apply(c.spec.xi.matrix().column(u), bv));
      rhs = rat_vec_add(rhs, rat_vec_scale(Rational(-first_sign * suv),
                                           c.star.apply(bu, op.matrix().column(v))));
      if (lhs != rhs)
        out.push_back({"D-Leibniz", "(" + s->name(u) + "," + s->name(v) + ")",
                       "proof-level Leibniz relation failed"});
    }
}

std::vector<Violation> check_odd_orthosymplectic_system(const SpecContext& c) {
  std::vector<Violation> out;
  check_xi_bracket(out, c);
  const LinearOperator& xi = c.spec.xi;
  LinearOperator sum = c.xi_star + xi;

  // ξ∘ξ* + ξ*∘ξ = R_{b₀} − 3ξ²
  check_operator_equal(out, "xi-anticommutator",
                       LinearOperator::anti_commutator(xi, c.xi_star),
                       c.r_b0 - xi.compose(xi).scaled(3));
  // Leibniz with D(u) = −(−1)^{|u|}(ξ*+ξ)(u)
  check_odd_leibniz(out, c, sum, -1);
  // L_{b₀} = −(ξ+ξ*)²
  check_operator_equal(out, "L-b0", c.l_b0, sum.compose(sum).scaled(-1));
  // (2ξ+ξ*)(b₀) = 0
  if (!rat_vec_is_zero((xi.scaled(2) + c.xi_star).apply(c.spec.b0.coords)))
    out.push_back({"b0-condition", "(b0)", "(2xi+xi*)(b0) != 0"});
  return out;
}

std::vector<Violation> check_odd_periplectic_system(const SpecContext& c) {
  std::vector<Violation> out;
  check_xi_bracket(out, c);
  const LinearOperator& xi = c.spec.xi;
  LinearOperator sum = c.xi_star + xi;
  LinearOperator diff = c.xi_star - xi;

  // ξ∘ξ* + ξ*∘ξ = 3ξ² + R_{b₀}
  check_operator_equal(out, "xi-anticommutator",
                       LinearOperator::anti_commutator(xi, c.xi_star),
                       xi.compose(xi).scaled(3) + c.r_b0);
  // Leibniz with D(u) = (−1)^{|u|}(ξ*−ξ)(u)
  check_odd_leibniz(out, c, diff, +1);
  // L_{b₀} = (ξ+ξ*)²
  check_operator_equal(out, "L-b0", c.l_b0, sum.compose(sum));
  // 2ξ(b₀) = ξ*(b₀)
  if (!rat_vec_is_zero((xi.scaled(2) - c.xi_star).apply(c.spec.b0.coords)))
    out.push_back({"b0-condition", "(b0)", "2xi(b0) != xi*(b0)"});
  return out;
}

}  // namespace

std::vector<Violation> check_admissible(const ExtensionSpec& spec) {
  SpecContext c = make_context(spec);
  switch (spec.variant) {
    case ExtVariant::even_orthosymplectic:
    case ExtVariant::even_periplectic:
      return check_even_system(c);
    case ExtVariant::odd_orthosymplectic:
      return check_odd_orthosymplectic_system(c);
    case ExtVariant::odd_periplectic:
      return check_odd_periplectic_system(c);
  }
  throw UsageError("unknown variant");
}

namespace {

RatVec embed(const RatVec& seed_coords, std::size_t n, const Rational& d_coord,
             const Rational& e_coord) {
  RatVec out(n + 2);
  out[0] = d_coord;
  for (std::size_t i = 0; i < n; ++i) out[1 + i] = seed_coords[i];
  out[n + 1] = e_coord;
  return out;
}

}  // namespace

DoubleExtension double_extend(const ExtensionSpec& spec) {
  auto violations = check_admissible(spec);
  if (!violations.empty()) {
    std::string msg = "extension spec is not admissible:";
    for (const auto& v : violations) msg += "\n  " + v.to_string();
    throw PreconditionError(msg);
  }
  SpecContext c = make_context(spec);
  const auto& seed = spec.seed;
  const auto& ss = seed.space();
  const std::size_t n = ss->dim();
  const auto& omega_b = *seed.form();
  const LinearOperator& xi = spec.xi;
  const LinearOperator& xi_star = c.xi_star;
  const ExtVariant variant = spec.variant;
  const bool odd_variant = variant_d_parity(variant) == Parity::odd;

  std::vector<std::string> names{spec.d_name};
  std::vector<Parity> parities{variant_d_parity(variant)};
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(ss->name(i));
    parities.push_back(ss->parity(i));
  }
  names.push_back(spec.e_name);
  parities.push_back(variant_e_parity(variant));
  SpacePtr es = make_space_with_parities(names, parities);
  const std::size_t dim = n + 2;

  auto seed_sign = [&](std::size_t i) {
    return ss->parity(i) == Parity::odd ? -1 : 1;
  };

  // [d,u], u a seed basis vector.
  auto bracket_d = [&](std::size_t u) {
    RatVec part(n);
    if (!odd_variant) {
      part = (xi_star - xi.scaled(2)).apply(basis_vector(ss, u).coords);
    } else if (variant == ExtVariant::odd_orthosymplectic) {
      part = rat_vec_scale(Rational(-seed_sign(u)),
                           (xi_star + xi.scaled(2)).apply(basis_vector(ss, u).coords));
    } else {
      part = rat_vec_scale(Rational(seed_sign(u)),
                           (xi_star - xi.scaled(2)).apply(basis_vector(ss, u).coords));
    }
    Rational e_coef = omega_b.eval(spec.b0.coords, basis_vector(ss, u).coords);
    return embed(part, n, Rational(0), e_coef);
  };

  // e-coefficient of [u,v] for seed basis vectors.
  auto bracket_e_coef = [&](std::size_t u, std::size_t v) -> Rational {
    RatVec bu = basis_vector(ss, u).coords, bv = basis_vector(ss, v).coords;
    if (!odd_variant)
      return omega_b.eval((xi + xi_star).apply(bu), bv);
    return Rational(seed_sign(v)) * omega_b.eval(xi.apply(bu), bv) +
           Rational(seed_sign(u)) * omega_b.eval(xi_star.apply(bu), bv);
  };

  ProductTable bracket(es);
  // [d,d]
  if (variant == ExtVariant::odd_orthosymplectic)
    bracket.set_product(0, 0, embed(rat_vec_scale(2, spec.b0.coords), n, 0, 0));
  else if (variant == ExtVariant::odd_periplectic)
    bracket.set_product(0, 0, embed(rat_vec_scale(-2, spec.b0.coords), n, 0, 0));
  // [d,u] and [u,d]
  for (std::size_t u = 0; u < n; ++u) {
    RatVec du = bracket_d(u);
    bracket.set_product(0, 1 + u, du);
    int sg = sign_of(variant_d_parity(variant), ss->parity(u));
    bracket.set_product(1 + u, 0, rat_vec_scale(Rational(-sg), du));
  }
  // seed block
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      bracket.set_product(
          1 + u, 1 + v,
          embed(seed.bracket().product(u, v), n, 0, bracket_e_coef(u, v)));
  // [e, anything] = 0 already.

  // Extended form.
  Matrix vals(dim, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vals.at(1 + i, 1 + j) = omega_b.value(i, j);
  vals.at(dim - 1, 0) = 1;  // ω(e,d) = 1
  vals.at(0, dim - 1) =
      (variant == ExtVariant::odd_orthosymplectic) ? 1 : -1;  // ω(d,e)
  BilinearForm omega(es, variant_form_parity(variant), std::move(vals));

  LieSuperalgebra g(es, std::move(bracket), omega);
  {
    auto bad = validate(g);
    if (!bad.empty())
      throw std::logic_error("double extension failed validation: " +
                             bad.front().to_string());
  }

  // Predicted natural product.
  ProductTable predicted(es);
  // d⋆d
  {
    RatVec dd(n);
    if (!odd_variant)
      dd = rat_vec_scale(Rational(1, 3), spec.b0.coords);
    else if (variant == ExtVariant::odd_orthosymplectic)
      dd = spec.b0.coords;
    else
      dd = rat_vec_scale(Rational(-1), spec.b0.coords);
    predicted.set_product(0, 0, embed(dd, n, 0, 0));
  }
  for (std::size_t u = 0; u < n; ++u) {
    RatVec bu = basis_vector(ss, u).coords;
    Rational wb0u = omega_b.eval(spec.b0.coords, bu);
    // d⋆u
    RatVec du;
    Rational du_e(0);
    if (!odd_variant) {
      du = (xi_star - xi).apply(bu);
      du_e = wb0u / 3;
    } else if (variant == ExtVariant::odd_orthosymplectic) {
      du = rat_vec_scale(Rational(-seed_sign(u)), (xi_star + xi).apply(bu));
      du_e = wb0u;
    } else {
      du = rat_vec_scale(Rational(seed_sign(u)), (xi_star - xi).apply(bu));
      du_e = wb0u;
    }
    predicted.set_product(0, 1 + u, embed(du, n, 0, du_e));
    // u⋆d
    RatVec ud = xi.matrix().column(u);
    Rational ud_e = odd_variant ? Rational(0) : Rational(-2) * wb0u / 3;
    predicted.set_product(1 + u, 0, embed(ud, n, 0, ud_e));
    // u⋆v
    for (std::size_t v = 0; v < n; ++v) {
      RatVec bv = basis_vector(ss, v).coords;
      Rational mu = omega_b.eval(xi.apply(bu), bv);
      if (odd_variant) mu *= seed_sign(v);
      predicted.set_product(1 + u, 1 + v,
                            embed(c.star.product(u, v), n, 0, mu));
    }
  }

  ProductTable star = natural_symplectic_product(g, false);
  if (!(star == predicted))
    throw std::logic_error("double extension: natural product differs from the "
                           "predicted table");
  if (!curvature(g, star).is_zero())
    throw std::logic_error("double extension is not flat");
  return DoubleExtension{std::move(g), std::move(predicted)};
}

namespace {

// Greedily extends span(fixed) by homogeneous basis vectors of `pool`.
std::vector<RatVec> complement_in(const std::vector<RatVec>& pool,
                                  std::vector<RatVec> fixed, std::size_t dim) {
  std::vector<RatVec> chosen;
  std::size_t have = span_rank(fixed, dim);
  for (const auto& v : pool) {
    auto trial = fixed;
    trial.push_back(v);
    if (span_rank(trial, dim) > have) {
      fixed.push_back(v);
      chosen.push_back(v);
      ++have;
    }
  }
  return chosen;
}

}  // namespace

LieSuperalgebra reduce(const LieSuperalgebra& g, const Vec& a) {
  if (!a.space->same_basis(*g.space())) throw UsageError("reduce: element from another space");
  if (!is_quasi_frobenius(g) || !is_flat(g))
    throw PreconditionError("reduce needs a flat quasi-Frobenius algebra");
  if (a.is_zero() || !a.is_homogeneous())
    throw PreconditionError("reduce needs a nonzero homogeneous element");
  const std::size_t n = g.dim();
  const auto& omega = *g.form();
  auto z = center(g);
  if (!subspace_contains(z, a.coords, n))
    throw PreconditionError("element is not central");
  // Isotropy makes Ka ⊆ (Ka)⊥; elements of Z(g) ∩ Z(g)⊥ always qualify.
  if (!is_zero(omega.eval(a.coords, a.coords)))
    throw PreconditionError("element is not isotropic");

  auto iperp = homogeneous_basis(orthogonal_complement({a.coords}, omega), g.space());
  auto comp = complement_in(iperp, {a.coords}, n);
  if (comp.size() != n - 2) throw std::logic_error("reduce: complement has wrong size");

  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    names.push_back("b" + std::to_string(i + 1));
    parities.push_back(Vec(g.space(), comp[i]).parity());
  }
  SpacePtr qs = make_space_with_parities(names, parities);

  // Coordinates inside I⊥ in the basis (a, comp...).
  std::vector<RatVec> full{a.coords};
  full.insert(full.end(), comp.begin(), comp.end());
  ProductTable qbracket(qs);
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = 0; j < comp.size(); ++j) {
      RatVec br = g.bracket_of(comp[i], comp[j]);
      auto coords = coordinates_in(full, br, n);
      if (!coords) throw std::logic_error("reduce: bracket escaped the coisotropic");
      RatVec qc(comp.size());
      for (std::size_t k = 0; k < comp.size(); ++k) qc[k] = (*coords)[k + 1];
      qbracket.set_product(i, j, qc);
    }
  Matrix qvals(comp.size(), comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = 0; j < comp.size(); ++j)
      qvals.at(i, j) = omega.eval(comp[i], comp[j]);
  BilinearForm qomega(qs, omega.parity(), std::move(qvals));
  LieSuperalgebra out(qs, std::move(qbracket), std::move(qomega));
  if (!validate(out).empty())
    throw std::logic_error("reduce: quotient failed validation");
  if (!is_flat(out)) throw std::logic_error("reduce: quotient is not flat");
  return out;
}

Decomposition decompose(const LieSuperalgebra& g) {
  if (!is_quasi_frobenius(g) || !is_flat(g))
    throw PreconditionError("decompose needs a flat quasi-Frobenius algebra");
  if (g.is_abelian())
    throw PreconditionError("decompose needs a non-abelian algebra");
  const std::size_t n = g.dim();
  const auto& omega = *g.form();
  const auto& gs = g.space();

  auto z = center(g);
  auto zz = subspace_intersection(z, orthogonal_complement(z, omega), n);
  if (zz.empty())
    throw PreconditionError(
        "no isotropic central vector found; input is not a valid flat algebra");
  auto zz_hom = homogeneous_basis(zz, gs);
  RatVec e = zz_hom.front();
  Parity pe = Vec(gs, e).parity();

  ExtVariant variant;
  if (omega.parity() == Parity::even)
    variant = (pe == Parity::even) ? ExtVariant::even_orthosymplectic
                                   : ExtVariant::odd_orthosymplectic;
  else
    variant = (pe == Parity::odd) ? ExtVariant::even_periplectic
                                  : ExtVariant::odd_periplectic;
  Parity pd = variant_d_parity(variant);

  // d: scaled basis vector of parity pd with ω(e,d) = 1, smallest index.
  std::optional<RatVec> d;
  for (std::size_t j = 0; j < n; ++j) {
    if (gs->parity(j) != pd) continue;
    Rational val = omega.eval(e, basis_vector(gs, j).coords);
    if (is_zero(val)) continue;
    d = rat_vec_scale(1 / val, basis_vector(gs, j).coords);
    break;
  }
  if (!d) throw std::logic_error("decompose: no dual partner for e");
  // Normalize ω(d,d) = 0 (only the odd-orthosymplectic case can violate it).
  Rational dd = omega.eval(*d, *d);
  if (!is_zero(dd))
    d = rat_vec_sub(*d, rat_vec_scale(dd / 2, e));

  auto comp = complement_in(
      homogeneous_basis(orthogonal_complement({e, *d}, omega), gs), {}, n);
  if (comp.size() != n - 2) throw std::logic_error("decompose: bad complement");

  // Seed on the complement.
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    names.push_back("b" + std::to_string(i + 1));
    parities.push_back(Vec(gs, comp[i]).parity());
  }
  SpacePtr qs = make_space_with_parities(names, parities);
  std::vector<RatVec> adapted{*d};
  adapted.insert(adapted.end(), comp.begin(), comp.end());
  adapted.push_back(e);

  auto in_adapted = [&](const RatVec& v) {
    auto c = coordinates_in(adapted, v, n);
    if (!c) throw std::logic_error("decompose: vector escaped the adapted basis");
    return *c;
  };

  ProductTable qbracket(qs);
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = 0; j < comp.size(); ++j) {
      RatVec c = in_adapted(g.bracket_of(comp[i], comp[j]));
      if (!is_zero(c[0]))
        throw std::logic_error("decompose: bracket has a d-component");
      RatVec qc(comp.size());
      for (std::size_t k = 0; k < comp.size(); ++k) qc[k] = c[k + 1];
      qbracket.set_product(i, j, qc);
    }
  Matrix qvals(comp.size(), comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = 0; j < comp.size(); ++j)
      qvals.at(i, j) = omega.eval(comp[i], comp[j]);
  BilinearForm qomega(qs, omega.parity(), std::move(qvals));
  if (!is_nondegenerate(qomega))
    throw std::logic_error("decompose: form degenerates on the complement");
  LieSuperalgebra seed(qs, std::move(qbracket), qomega);

  // ξ from u⋆d, b₀ from the e-coefficients of d⋆u.
  ProductTable star = natural_symplectic_product(g, false);
  Matrix xi_m(comp.size(), comp.size());
  RatVec g_of_u(comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i) {
    RatVec ud = in_adapted(star.apply(comp[i], *d));
    if (!is_zero(ud[0]))
      throw std::logic_error("decompose: u*d has a d-component");
    for (std::size_t k = 0; k < comp.size(); ++k) xi_m.at(k, i) = ud[k + 1];
    RatVec du = in_adapted(star.apply(*d, comp[i]));
    g_of_u[i] = du[comp.size() + 1];
  }
  bool odd_variant = pd == Parity::odd;
  Rational factor = odd_variant ? Rational(1) : Rational(3);
  // Solve ω_seed(b₀, w_i) = factor · g(w_i).
  Matrix lhs(comp.size(), comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t k = 0; k < comp.size(); ++k) lhs.at(i, k) = qomega.value(k, i);
  auto sol = solve_linear(lhs, rat_vec_scale(factor, g_of_u));
  if (!sol) throw std::logic_error("decompose: b0 system inconsistent");

  ExtensionSpec spec{std::move(seed),
                     LinearOperator(qs, pd, std::move(xi_m)),
                     Vec(qs, sol->particular), variant};
  if (!check_admissible(spec).empty())
    throw std::logic_error("decompose produced a non-admissible spec");
  return Decomposition{std::move(spec), std::move(adapted)};
}

Rational ScalarBilinear::eval(const RatVec& u, const RatVec& v) const {
  Rational out = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!is_zero(values.at(i, j)) && !is_zero(v[j]))
        out += u[i] * values.at(i, j) * v[j];
  }
  return out;
}

bool check_central_extension(const ProductTable& product, const ScalarBilinear& mu) {
  if (!mu.space->same_basis(*product.space()))
    throw UsageError("central extension data on a different space");
  const auto& s = product.space();
  const std::size_t n = s->dim();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        RatVec bu = basis_vector(s, u).coords, bv = basis_vector(s, v).coords,
               bw = basis_vector(s, w).coords;
        Rational lhs = mu.eval(product.product(u, v), bw) -
                       mu.eval(bu, product.product(v, w));
        Rational rhs = Rational(sign_of(s->parity(u), s->parity(v))) *
                       (mu.eval(product.product(v, u), bw) -
                        mu.eval(bv, product.product(u, w)));
        if (lhs != rhs) return false;
      }
  return true;
}

std::vector<Violation> check_semidirect_context(const ProductTable& product,
                                                const LinearOperator& d_map,
                                                const LinearOperator& xi,
                                                const Vec& b0,
                                                const Rational& lambda) {
  const auto& s = product.space();
  if (!d_map.space()->same_basis(*s) || !xi.space()->same_basis(*s) ||
      !b0.space->same_basis(*s))
    throw UsageError("semidirect context data on a different space");
  if (d_map.parity() != xi.parity())
    throw PreconditionError("D and xi must share the adjoined parity");
  const Parity pd = d_map.parity();
  if (pd == Parity::odd && !is_zero(lambda))
    throw PreconditionError("lambda must vanish when d is odd");
  const std::size_t n = s->dim();
  std::vector<Violation> out;

  ProductTable comm = product.commutator_table();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      RatVec bu = basis_vector(s, u).coords, bv = basis_vector(s, v).coords;
      int sg = sign_of(s->parity(u), s->parity(v));
      RatVec lhs = xi.apply(comm.product(u, v));
      RatVec rhs = rat_vec_sub(
          product.apply(bu, xi.matrix().column(v)),
          rat_vec_scale(Rational(sg), product.apply(bv, xi.matrix().column(u))));
      if (lhs != rhs)
        out.push_back({"xi-bracket-compat", "(" + s->name(u) + "," + s->name(v) + ")",
                       "first compatibility clause failed"});

      int sd = sign_of(pd, s->parity(u));
      RatVec lhs2 = d_map.apply(product.product(u, v));
      RatVec rhs2 = product.apply(d_map.matrix().column(u), bv);
      rhs2 = rat_vec_add(rhs2, rat_vec_scale(Rational(sd),
                                             product.apply(bu, d_map.matrix().column(v))));
      rhs2 = rat_vec_sub(rhs2, rat_vec_scale(Rational(sd),
                                             product.apply(xi.matrix().column(u), bv)));
      if (lhs2 != rhs2)
        out.push_back({"D-Leibniz", "(" + s->name(u) + "," + s->name(v) + ")",
                       "second compatibility clause failed"});
    }

  LinearOperator r_b0 = product.right_mult(b0);
  LinearOperator l_b0 = product.left_mult(b0);
  // (ξ∘D − D∘ξ)(u) = (−1)^{|d||u|}(ξ² − λξ − R_{b₀})(u), checked per column.
  {
    Matrix lhs = (xi.compose(d_map) - d_map.compose(xi)).matrix();
    Matrix rhs_core =
        (xi.compose(xi) - xi.scaled(lambda) - r_b0).matrix();
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      int sg = sign_of(pd, s->parity(j));
      for (std::size_t i = 0; i < n && ok; ++i)
        if (lhs.at(i, j) != Rational(sg) * rhs_core.at(i, j)) ok = false;
    }
    if (!ok)
      out.push_back({"xi-D-commutator", "(operator)",
                     "third compatibility clause failed"});
  }
  if (pd == Parity::odd) {
    Matrix lhs = (d_map.compose(d_map) - d_map.scaled(lambda) - l_b0).matrix();
    if (!lhs.is_zero())
      out.push_back({"D-square", "(operator)", "fourth compatibility clause failed"});
    if (!rat_vec_is_zero((xi - d_map).apply(b0.coords)))
      out.push_back({"b0-condition", "(b0)", "(xi - D)(b0) != 0"});
  }
  return out;
}

}  // namespace qf
