#include "qf/lie_superalgebra.hpp"

#include <array>

#include "qf/parallel.hpp"

namespace qf {

std::string Violation::to_string() const {
  std::string s = rule + " at " + where;
  if (!detail.empty()) s += ": " + detail;
  return s;
}

ProductTable make_bracket(const SpacePtr& space,
                          const std::vector<BracketEntry>& entries) {
  ProductTable t(space);
  for (const auto& e : entries) {
    if (e.i > e.j) throw UsageError("bracket entries must have i <= j in basis order");
    if (e.i == e.j && space->parity(e.i) == Parity::even) {
      if (!rat_vec_is_zero(e.coords))
        throw UsageError("[" + space->name(e.i) + "," + space->name(e.i) +
                         "] must vanish for an even basis vector");
    }
    t.set_product(e.i, e.j, e.coords);
    if (e.i != e.j) {
      int s = sign_of(space->parity(e.i), space->parity(e.j));
      t.set_product(e.j, e.i, rat_vec_scale(Rational(-s), e.coords));
    }
  }
  return t;
}

LieSuperalgebra::LieSuperalgebra(SpacePtr space, ProductTable bracket,
                                 std::optional<BilinearForm> form)
    : space_(std::move(space)), bracket_(std::move(bracket)), form_(std::move(form)) {
  if (!bracket_.space()->same_basis(*space_))
    throw UsageError("bracket lives on a different space");
  if (form_ && !form_->space()->same_basis(*space_))
    throw UsageError("form lives on a different space");
}

namespace {

std::string triple_name(const SpacePtr& s, std::size_t i, std::size_t j,
                        std::size_t k) {
  return "(" + s->name(i) + "," + s->name(j) + "," + s->name(k) + ")";
}

std::string pair_name(const SpacePtr& s, std::size_t i, std::size_t j) {
  return "(" + s->name(i) + "," + s->name(j) + ")";
}

std::vector<std::array<std::size_t, 3>> ordered_triples(std::size_t n) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) out.push_back({i, j, k});
  return out;
}

// Violations are computed into per-triple slots and compacted in index
// order, so parallel and serial runs print identically.
template <typename Fn>
std::vector<Violation> scan_triples(std::size_t n, Fn&& check) {
  auto triples = ordered_triples(n);
  std::vector<std::optional<Violation>> slots(triples.size());
  parallel_for(triples.size(), [&](std::size_t idx) {
    const auto& t = triples[idx];
    slots[idx] = check(t[0], t[1], t[2]);
  });
  std::vector<Violation> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<Violation> antisymmetry_violations(const LieSuperalgebra& g) {
  const auto& s = g.space();
  const std::size_t n = g.dim();
  std::vector<Violation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      int sign = sign_of(s->parity(i), s->parity(j));
      RatVec lhs = g.bracket().product(i, j);
      RatVec rhs = rat_vec_scale(Rational(-sign), g.bracket().product(j, i));
      if (lhs != rhs)
        out.push_back({"anti-symmetry", pair_name(s, i, j),
                       "[u,v] != -(-1)^{|u||v|}[v,u]"});
    }
  return out;
}

std::vector<Violation> jacobi_violations(const LieSuperalgebra& g) {
  const auto& s = g.space();
  const auto& br = g.bracket();
  return scan_triples(g.dim(), [&](std::size_t i, std::size_t j,
                                   std::size_t k) -> std::optional<Violation> {
    RatVec term1 = br.apply(br.product(i, j), basis_vector(s, k).coords);
    RatVec term2 = br.apply(br.product(j, k), basis_vector(s, i).coords);
    RatVec term3 = br.apply(br.product(k, i), basis_vector(s, j).coords);
    RatVec sum(g.dim());
    int s1 = sign_of(s->parity(i), s->parity(k));
    int s2 = sign_of(s->parity(j), s->parity(i));
    int s3 = sign_of(s->parity(k), s->parity(j));
    for (std::size_t m = 0; m < g.dim(); ++m)
      sum[m] = Rational(s1) * term1[m] + Rational(s2) * term2[m] +
               Rational(s3) * term3[m];
    if (rat_vec_is_zero(sum)) return std::nullopt;
    return Violation{"jacobi", triple_name(s, i, j, k), "graded cyclic sum nonzero"};
  });
}

std::vector<Violation> closedness_violations(const LieSuperalgebra& g) {
  if (!g.form()) return {};
  const auto& s = g.space();
  const auto& br = g.bracket();
  const auto& omega = *g.form();
  return scan_triples(g.dim(), [&](std::size_t i, std::size_t j,
                                   std::size_t k) -> std::optional<Violation> {
    Rational sum =
        Rational(sign_of(s->parity(i), s->parity(k))) *
            omega.eval(br.product(i, j), basis_vector(s, k).coords) +
        Rational(sign_of(s->parity(j), s->parity(i))) *
            omega.eval(br.product(j, k), basis_vector(s, i).coords) +
        Rational(sign_of(s->parity(k), s->parity(j))) *
            omega.eval(br.product(k, i), basis_vector(s, j).coords);
    if (is_zero(sum)) return std::nullopt;
    return Violation{"closedness", triple_name(s, i, j, k),
                     "cyclic sum = " + to_string(sum)};
  });
}

std::vector<Violation> validate(const LieSuperalgebra& g) {
  std::vector<Violation> out = antisymmetry_violations(g);
  auto jac = jacobi_violations(g);
  out.insert(out.end(), jac.begin(), jac.end());
  if (g.form()) {
    if (!is_nondegenerate(*g.form()))
      out.push_back({"nondegeneracy", "(form)", "values matrix is singular"});
    auto closed = closedness_violations(g);
    out.insert(out.end(), closed.begin(), closed.end());
  }
  return out;
}

bool is_quasi_frobenius(const LieSuperalgebra& g) {
  return g.form().has_value() && validate(g).empty();
}

std::vector<RatVec> center(const LieSuperalgebra& g) {
  const std::size_t n = g.dim();
  Matrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        m.at(j * n + k, i) = g.bracket().coeff(i, j, k);
  return m.kernel_basis();
}

std::vector<RatVec> derived_subalgebra(const LieSuperalgebra& g) {
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) gens.push_back(g.bracket().product(i, j));
  return span_basis(gens, g.dim());
}

std::vector<RatVec> subspace_bracket(const LieSuperalgebra& g,
                                     const std::vector<RatVec>& a,
                                     const std::vector<RatVec>& b) {
  std::vector<RatVec> gens;
  for (const auto& u : a)
    for (const auto& v : b) gens.push_back(g.bracket_of(u, v));
  return span_basis(gens, g.dim());
}

namespace {

std::vector<RatVec> whole_space(std::size_t n) {
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec v(n);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

bool subspace_degenerate(const std::vector<RatVec>& s, const BilinearForm& omega) {
  auto perp = orthogonal_complement(s, omega);
  return !subspace_intersection(s, perp, omega.space()->dim()).empty();
}

StructuralReport series(const LieSuperalgebra& g) {
  StructuralReport r;
  const std::size_t n = g.dim();
  r.center_basis = center(g);
  r.derived_basis = derived_subalgebra(g);

  auto all = whole_space(n);
  std::vector<RatVec> term = all;
  r.lcs_dims.push_back(term.size());
  while (true) {
    auto next = subspace_bracket(g, all, term);
    r.lcs_dims.push_back(next.size());
    if (next.size() == term.size() || next.empty()) break;
    term = std::move(next);
  }
  r.is_nilpotent = r.lcs_dims.back() == 0;

  term = all;
  r.ds_dims.push_back(term.size());
  while (true) {
    auto next = subspace_bracket(g, term, term);
    r.ds_dims.push_back(next.size());
    if (next.size() == term.size() || next.empty()) break;
    term = std::move(next);
  }
  r.is_solvable = r.ds_dims.back() == 0;

  if (g.form()) {
    r.center_degenerate = !r.center_basis.empty() &&
                          subspace_degenerate(r.center_basis, *g.form());
    r.derived_degenerate = !r.derived_basis.empty() &&
                           subspace_degenerate(r.derived_basis, *g.form());
  }
  return r;
}

Normalizers normalizers(const LieSuperalgebra& g, const ProductTable& p) {
  if (!p.space()->same_basis(*g.space()))
    throw UsageError("normalizers: product lives on a different space");
  const std::size_t n = g.dim();
  Matrix left(n * n, n), right(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        left.at(j * n + k, i) = p.coeff(i, j, k);
        right.at(j * n + k, i) = p.coeff(j, i, k);
      }
  Normalizers out;
  out.left = left.kernel_basis();
  out.right = right.kernel_basis();
  out.two_sided = subspace_intersection(out.left, out.right, n);
  return out;
}

LieSuperalgebra change_of_basis(const LieSuperalgebra& g,
                                const std::vector<std::string>& new_names,
                                const std::vector<RatVec>& new_basis) {
  const std::size_t n = g.dim();
  if (new_names.size() != n || new_basis.size() != n)
    throw UsageError("change_of_basis needs a full basis");
  std::vector<Parity> parities;
  for (const auto& v : new_basis) {
    Vec vec(g.space(), v);
    if (!vec.is_homogeneous())
      throw UsageError("change_of_basis: basis vector is not homogeneous");
    parities.push_back(vec.parity());
  }
  Matrix v_cols = Matrix::from_columns(n, new_basis);
  auto inv = v_cols.inverse();
  if (!inv) throw UsageError("change_of_basis: vectors are dependent");
  SpacePtr ns = make_space_with_parities(new_names, parities);
  ProductTable nb(ns);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      nb.set_product(i, j, *inv * g.bracket_of(new_basis[i], new_basis[j]));
  std::optional<BilinearForm> nf;
  if (g.form()) {
    Matrix vals(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        vals.at(i, j) = g.form()->eval(new_basis[i], new_basis[j]);
    nf = BilinearForm(ns, g.form()->parity(), std::move(vals));
  }
  return LieSuperalgebra(ns, std::move(nb), std::move(nf));
}

}  // namespace qf
