#include "qf/catalog.hpp"

#include <sstream>

namespace qf {

namespace {

struct NamedBracket {
  std::string a, b;
  std::vector<std::pair<Rational, std::string>> terms;
};

struct NamedWedge {
  std::string a, b;
  Rational coeff;
};

LieSuperalgebra build(const SpacePtr& s, const std::vector<NamedBracket>& brackets,
                      const std::vector<NamedWedge>& wedges, Parity form_parity) {
  std::vector<BracketEntry> entries;
  for (const auto& nb : brackets) {
    std::size_t i = *s->index_of(nb.a), j = *s->index_of(nb.b);
    RatVec coords(s->dim());
    for (const auto& [c, name] : nb.terms) coords[*s->index_of(name)] = c;
    entries.push_back({i, j, coords});
  }
  std::vector<WedgeTerm> terms;
  for (const auto& w : wedges)
    terms.push_back({*s->index_of(w.a), *s->index_of(w.b), w.coeff});
  return LieSuperalgebra(s, make_bracket(s, entries),
                         wedge_form(terms, s, form_parity));
}

CatalogEntry make_entry(std::string name, LieSuperalgebra algebra, bool flat,
                        bool nilpotent, bool non_abelian, Parity form_parity,
                        std::string provenance) {
  return CatalogEntry{std::move(name), std::move(algebra),
                      {flat, nilpotent, non_abelian, form_parity},
                      std::move(provenance)};
}

}  // namespace

std::vector<CatalogEntry> load_catalog() {
  std::vector<CatalogEntry> out;

  {
    auto s = make_space({}, {"f1"});
    out.push_back(make_entry("abelian1-odd",
                             build(s, {}, {{"f1", "f1", 1}}, Parity::even), true,
                             true, false, Parity::even, "reference abelian series"));
  }
  {
    auto s = make_space({"e1", "e2"}, {});
    out.push_back(make_entry("abelian2-orthosymplectic",
                             build(s, {}, {{"e1", "e2", 1}}, Parity::even), true,
                             true, false, Parity::even, "reference abelian series"));
  }
  {
    auto s = make_space({}, {"f1", "f2"});
    out.push_back(make_entry(
        "abelian2-odd",
        build(s, {}, {{"f1", "f1", 1}, {"f2", "f2", 1}}, Parity::even), true, true,
        false, Parity::even, "reference abelian series"));
  }
  {
    auto s = make_space({"e1"}, {"f1"});
    out.push_back(make_entry("abelian2-periplectic",
                             build(s, {}, {{"e1", "f1", 1}}, Parity::odd), true,
                             true, false, Parity::odd, "reference abelian series"));
  }
  {
    auto s = make_space({"e1", "e2"}, {"f1"});
    out.push_back(make_entry(
        "abelian3-orthosymplectic",
        build(s, {}, {{"e1", "e2", 1}, {"f1", "f1", 1}}, Parity::even), true, true,
        false, Parity::even, "reference abelian series"));
  }
  {
    auto s = make_space({"e1", "e2"}, {"f1", "f2"});
    out.push_back(make_entry(
        "D5",
        build(s,
              {{"e1", "f1", {{1, "f1"}}},
               {"e1", "f2", {{1, "f2"}}},
               {"e2", "f2", {{1, "f1"}}}},
              {{"e1", "f1", 1}, {"e2", "f2", 1}}, Parity::odd),
        false, false, true, Parity::odd, "worked example, periplectic"));
  }
  {
    auto s = make_space({"e1", "e2"}, {"f1", "f2"});
    out.push_back(make_entry(
        "C3+A",
        build(s, {{"e1", "f1", {{1, "f2"}}}, {"f1", "f1", {{1, "e2"}}}},
              {{"e1", "e2", 2}, {"f1", "f2", -1}}, Parity::even),
        true, true, true, Parity::even, "worked example, orthosymplectic"));
  }
  {
    auto s = make_space({"x1", "x2", "x3", "x4"}, {});
    out.push_back(make_entry(
        "K+h3",
        build(s, {{"x1", "x2", {{1, "x3"}}}}, {{"x1", "x4", 1}, {"x2", "x3", 1}},
              Parity::even),
        true, true, true, Parity::even, "dimension-4 classification (i)"));
  }
  {
    auto s = make_space({"x1", "x2"}, {"y1", "y2"});
    out.push_back(make_entry(
        "g2-dim4",
        build(s, {{"x1", "y1", {{1, "y2"}}}, {"y1", "y1", {{1, "x2"}}}},
              {{"x1", "x2", 2}, {"y1", "y2", -1}}, Parity::even),
        true, true, true, Parity::even, "dimension-4 classification (ii)"));
  }
  {
    auto s = make_space({"x1", "x2"}, {"y1", "y2"});
    out.push_back(make_entry(
        "g3-dim4",
        build(s, {{"x1", "y1", {{1, "y2"}}}}, {{"x1", "y2", 1}, {"x2", "y1", 1}},
              Parity::odd),
        true, true, true, Parity::odd, "dimension-4 classification (iii)"));
  }
  {
    auto s = make_space({"x1", "x2"}, {"y1", "y2"});
    out.push_back(make_entry(
        "g4-dim4",
        build(s, {{"y1", "y1", {{1, "x1"}}}, {"y1", "y2", {{1, "x2"}}}},
              {{"x1", "y2", -2}, {"x2", "y1", 1}}, Parity::odd),
        true, true, true, Parity::odd, "dimension-4 classification (iv)"));
  }
  {
    auto s = make_space({"x1", "x2", "x3", "x4"}, {"y1"});
    out.push_back(make_entry(
        "g1-dim5",
        build(s, {{"x1", "x2", {{1, "x3"}}}},
              {{"x1", "x4", 1}, {"x2", "x3", 1}, {"y1", "y1", 1}}, Parity::even),
        true, true, true, Parity::even, "dimension-5 classification (i)"));
  }
  {
    auto s = make_space({"x1", "x2"}, {"y1", "y2", "y3"});
    out.push_back(make_entry(
        "g2-dim5",
        build(s, {{"x1", "y1", {{1, "y2"}}}, {"y1", "y1", {{1, "x2"}}}},
              {{"x1", "x2", 2}, {"y1", "y2", -1}, {"y3", "y3", 1}}, Parity::even),
        true, true, true, Parity::even, "dimension-5 classification (ii)"));
  }

  for (const auto& entry : out) {
    auto bad = validate(entry.algebra);
    if (!bad.empty())
      throw std::logic_error("catalog entry " + entry.name +
                             " failed validation: " + bad.front().to_string());
    if (entry.algebra.form()->parity() != entry.expected.form_parity)
      throw std::logic_error("catalog entry " + entry.name + ": form parity flag");
    if (is_flat(entry.algebra) != entry.expected.flat)
      throw std::logic_error("catalog entry " + entry.name + ": flat flag");
    if (series(entry.algebra).is_nilpotent != entry.expected.nilpotent)
      throw std::logic_error("catalog entry " + entry.name + ": nilpotent flag");
    if (entry.algebra.is_abelian() == entry.expected.non_abelian)
      throw std::logic_error("catalog entry " + entry.name + ": non-abelian flag");
  }
  return out;
}

const CatalogEntry& catalog_entry(const std::vector<CatalogEntry>& entries,
                                  const std::string& name) {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw UsageError("no catalog entry named " + name);
}

std::vector<Violation> verify_morphism(const MorphismClaim& claim) {
  const std::size_t n = claim.source.dim();
  if (claim.target.dim() != n || claim.map.rows() != n || claim.map.cols() != n)
    throw UsageError("morphism claim has mismatched dimensions");
  const auto& ss = claim.source.space();
  const auto& ts = claim.target.space();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(claim.map.at(i, j)) && ts->parity(i) != ss->parity(j))
        throw PreconditionError("morphism map is not even");
  if (!claim.map.invertible())
    throw PreconditionError("morphism map is singular");

  std::vector<Violation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatVec lhs = claim.map * claim.source.bracket().product(i, j);
      RatVec rhs =
          claim.target.bracket_of(claim.map.column(i), claim.map.column(j));
      if (lhs != rhs)
        out.push_back({"bracket-preservation",
                       "(" + ss->name(i) + "," + ss->name(j) + ")",
                       "phi([u,v]) != [phi(u),phi(v)]"});
    }
  if (claim.symplectic) {
    if (!claim.source.form() || !claim.target.form())
      throw PreconditionError("symplectomorphism claim needs forms on both sides");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational lhs = claim.target.form()->eval(claim.map.column(i),
                                                 claim.map.column(j));
        Rational rhs = claim.source.form()->value(i, j);
        if (lhs != rhs)
          out.push_back({"form-preservation",
                         "(" + ss->name(i) + "," + ss->name(j) + ")",
                         "omega(phi(u),phi(v)) != omega(u,v)"});
      }
  }
  return out;
}

std::optional<Rational> rational_cbrt(const Rational& q) {
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class rn, rd;
  bool neg = num < 0;
  mpz_class an = neg ? mpz_class(-num) : num;
  if (mpz_root(rn.get_mpz_t(), an.get_mpz_t(), 3) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3) == 0) return std::nullopt;
  Rational out(neg ? mpz_class(-rn) : rn, rd);
  out.canonicalize();
  return out;
}

namespace {

// --- classification machinery -------------------------------------------

const std::vector<long> kGrid = {-2, -1, 0, 1, 2};
const std::vector<long> kGridNonzero = {-2, -1, 1, 2};

LieSuperalgebra seed_e2() {
  auto s = make_space({"e1", "e2"}, {});
  return build(s, {}, {{"e1", "e2", 1}}, Parity::even);
}

LieSuperalgebra seed_o2_offdiag() {
  auto s = make_space({}, {"f1", "f2"});
  return build(s, {}, {{"f1", "f2", -1}}, Parity::even);
}

LieSuperalgebra seed_o2_diag(long eps) {
  auto s = make_space({}, {"f1", "f2"});
  return build(s, {}, {{"f1", "f1", 1}, {"f2", "f2", Rational(eps)}}, Parity::even);
}

LieSuperalgebra seed_p2() {
  auto s = make_space({"e1"}, {"f1"});
  return build(s, {}, {{"e1", "f1", 1}}, Parity::odd);
}

LieSuperalgebra seed_s3() {
  auto s = make_space({"e1", "e2"}, {"f1"});
  return build(s, {}, {{"e1", "e2", 1}, {"f1", "f1", 1}}, Parity::even);
}

LinearOperator op_entry(const SpacePtr& s, Parity p, std::size_t row,
                        std::size_t col, const Rational& a) {
  Matrix m(s->dim(), s->dim());
  m.at(row, col) = a;
  return LinearOperator(s, p, std::move(m));
}

Vec vec_of(const SpacePtr& s, std::initializer_list<std::pair<std::size_t, Rational>>
                                  entries) {
  RatVec c(s->dim());
  for (const auto& [i, v] : entries) c[i] = v;
  return Vec(s, c);
}

std::string params(std::initializer_list<std::pair<const char*, Rational>> ps) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : ps) {
    if (!first) os << " ";
    first = false;
    os << k << "=" << to_string(v);
  }
  return os.str();
}

// Map images are given in extension coordinates (d, seed..., e).
struct FamilyInstance {
  std::string family;
  std::string parameters;
  ExtensionSpec spec;
  std::string normal_form;                // expected match for non-abelian rows
  std::optional<std::vector<RatVec>> map; // images of the normal form's basis
  bool map_rational = true;               // false => map skipped by design
};

RatVec ext_vec(std::size_t seed_dim,
               std::initializer_list<std::pair<std::size_t, Rational>> entries) {
  RatVec v(seed_dim + 2);
  for (const auto& [i, c] : entries) v[i] = c;
  return v;
}

void add_dim4_families(std::vector<FamilyInstance>& out) {
  // Extension coordinates: d = 0, seed index i = 1 + i, e = seed_dim + 1.
  const std::size_t D = 0;

  // even-orthosymplectic over the even plane, ξ = 0.
  for (long a : kGrid)
    for (long b : kGrid) {
      LieSuperalgebra seed = seed_e2();
      auto s = seed.space();
      ExtensionSpec spec{seed, LinearOperator::zero(s, Parity::even),
                         vec_of(s, {{0, Rational(a)}, {1, Rational(b)}}),
                         ExtVariant::even_orthosymplectic};
      FamilyInstance fi{"even-orthosymplectic xi=0",
                        params({{"alpha", Rational(a)}, {"beta", Rational(b)}}),
                        spec,
                        "K+h3",
                        std::nullopt};
      if (a != 0 || b != 0) {
        Rational al(a), be(b);
        std::vector<RatVec> map;
        if (b != 0) {
          map = {ext_vec(2, {{1, -1 / be}}), ext_vec(2, {{D, 1}}),
                 ext_vec(2, {{3, -1}}), ext_vec(2, {{1, -al}, {2, -be}})};
        } else {
          map = {ext_vec(2, {{2, 1 / al}}), ext_vec(2, {{D, 1}}),
                 ext_vec(2, {{3, -1}}), ext_vec(2, {{1, -al}})};
        }
        fi.map = map;
      }
      out.push_back(std::move(fi));
    }

  // even-orthosymplectic over the even plane, ξ(e2) = a·e1, b₀ = α·e1.
  for (long av : kGridNonzero)
    for (long al : kGrid) {
      LieSuperalgebra seed = seed_e2();
      auto s = seed.space();
      Rational a(av), alpha(al);
      ExtensionSpec spec{seed, op_entry(s, Parity::even, 0, 1, a),
                         vec_of(s, {{0, alpha}}),
                         ExtVariant::even_orthosymplectic};
      Rational t = (alpha + 1) / (3 * a);
      std::vector<RatVec> map = {
          ext_vec(2, {{D, 3 * a}, {2, alpha}}), ext_vec(2, {{D, 1}, {2, t}}),
          ext_vec(2, {{3, alpha}, {1, -3 * a}}), ext_vec(2, {{3, -t}, {1, 1}})};
      out.push_back({"even-orthosymplectic xi=(0 a;0 0)",
                     params({{"a", a}, {"alpha", alpha}}), spec, "K+h3", map});
    }

  // even-orthosymplectic over the odd plane, ξ(f2) = a·f1.
  for (long av : kGridNonzero) {
    LieSuperalgebra seed = seed_o2_offdiag();
    auto s = seed.space();
    Rational a(av);
    ExtensionSpec spec{seed, op_entry(s, Parity::even, 0, 1, a),
                       Vec(s, RatVec(2)), ExtVariant::even_orthosymplectic};
    std::vector<RatVec> map = {ext_vec(2, {{D, -1 / a}}), ext_vec(2, {{3, 2 * a}}),
                               ext_vec(2, {{2, -1}}), ext_vec(2, {{1, -1}})};
    out.push_back({"even-orthosymplectic odd-seed xi=(0 a;0 0)",
                   params({{"a", a}}), spec, "g2-dim4", map});
  }

  // even-orthosymplectic over the odd plane with a diagonal form: abelian.
  for (long eps : {1L, -1L}) {
    LieSuperalgebra seed = seed_o2_diag(eps);
    auto s = seed.space();
    ExtensionSpec spec{seed, LinearOperator::zero(s, Parity::even),
                       Vec(s, RatVec(2)), ExtVariant::even_orthosymplectic};
    out.push_back({"even-orthosymplectic odd-seed xi=0",
                   params({{"eps", Rational(eps)}}), spec, "abelian",
                   std::nullopt});
  }

  // odd-orthosymplectic over the even plane, ξ = 0.
  for (long a : kGrid)
    for (long b : kGrid) {
      LieSuperalgebra seed = seed_e2();
      auto s = seed.space();
      Rational al(a), be(b);
      ExtensionSpec spec{seed, LinearOperator::zero(s, Parity::odd),
                         vec_of(s, {{0, al}, {1, be}}),
                         ExtVariant::odd_orthosymplectic};
      FamilyInstance fi{"odd-orthosymplectic xi=0",
                        params({{"alpha", al}, {"beta", be}}), spec, "g2-dim4",
                        std::nullopt};
      if (a != 0 || b != 0) {
        std::vector<RatVec> map;
        if (b != 0)
          map = {ext_vec(2, {{1, 1 / be}}), ext_vec(2, {{2, 2 * be}, {1, 2 * al}}),
                 ext_vec(2, {{D, 1}}), ext_vec(2, {{3, 1}})};
        else
          map = {ext_vec(2, {{2, -1 / al}}), ext_vec(2, {{1, 2 * al}}),
                 ext_vec(2, {{D, 1}}), ext_vec(2, {{3, 1}})};
        fi.map = map;
      }
      out.push_back(std::move(fi));
    }

  // odd-orthosymplectic over the odd plane: abelian.
  for (long eps : {1L, -1L}) {
    LieSuperalgebra seed = seed_o2_diag(eps);
    auto s = seed.space();
    ExtensionSpec spec{seed, LinearOperator::zero(s, Parity::odd), Vec(s, RatVec(2)),
                       ExtVariant::odd_orthosymplectic};
    out.push_back({"odd-orthosymplectic odd-seed xi=0",
                   params({{"eps", Rational(eps)}}), spec, "abelian", std::nullopt});
  }

  // even-periplectic, ξ = 0, b₀ = α·e1.
  for (long a : kGrid) {
    LieSuperalgebra seed = seed_p2();
    auto s = seed.space();
    Rational alpha(a);
    ExtensionSpec spec{seed, LinearOperator::zero(s, Parity::even),
                       vec_of(s, {{0, alpha}}), ExtVariant::even_periplectic};
    FamilyInstance fi{"even-periplectic xi=0", params({{"alpha", alpha}}), spec,
                      "g3-dim4", std::nullopt};
    if (a != 0)
      fi.map = {ext_vec(2, {{D, 1}}), ext_vec(2, {{1, -alpha}}),
                ext_vec(2, {{2, -1 / alpha}}), ext_vec(2, {{3, -1}})};
    out.push_back(std::move(fi));
  }

  // odd-periplectic family 1: ξ = 0, b₀ = α·e1.
  for (long a : kGrid) {
    LieSuperalgebra seed = seed_p2();
    auto s = seed.space();
    Rational alpha(a);
    ExtensionSpec spec{seed, LinearOperator::zero(s, Parity::odd),
                       vec_of(s, {{0, alpha}}), ExtVariant::odd_periplectic};
    FamilyInstance fi{"odd-periplectic xi=0", params({{"alpha", alpha}}), spec,
                      "g4-dim4", std::nullopt};
    if (a != 0)
      fi.map = {ext_vec(2, {{1, -2 * alpha}}), ext_vec(2, {{3, 1}}),
                ext_vec(2, {{D, 1}}), ext_vec(2, {{2, 1 / alpha}})};
    out.push_back(std::move(fi));
  }

  // odd-periplectic family 2: ξ(e1) = a·f1, b₀ = 0. The extension bracket is
  // [d,e1] = −3a·f1; the change of basis is written in that coefficient.
  for (long av : kGridNonzero) {
    LieSuperalgebra seed = seed_p2();
    auto s = seed.space();
    Rational a(av), ahat = Rational(-3) * a;
    ExtensionSpec spec{seed, op_entry(s, Parity::odd, 1, 0, a), Vec(s, RatVec(2)),
                       ExtVariant::odd_periplectic};
    std::vector<RatVec> map = {ext_vec(2, {{1, 1}}), ext_vec(2, {{3, -ahat}}),
                               ext_vec(2, {{D, -1 / ahat}}), ext_vec(2, {{2, 1}})};
    out.push_back({"odd-periplectic xi=(0 0;a 0)", params({{"a", a}}), spec,
                   "g3-dim4", map});
  }

  // odd-periplectic family 3: ξ(f1) = a·e1, b₀ = α·e1.
  for (long av : kGridNonzero)
    for (long al : kGrid) {
      LieSuperalgebra seed = seed_p2();
      auto s = seed.space();
      Rational a(av), alpha(al);
      ExtensionSpec spec{seed, op_entry(s, Parity::odd, 0, 1, a),
                         vec_of(s, {{0, alpha}}), ExtVariant::odd_periplectic};
      FamilyInstance fi{"odd-periplectic xi=(0 a;0 0)",
                        params({{"a", a}, {"alpha", alpha}}), spec, "g4-dim4",
                        std::nullopt};
      if (al == 0) {
        fi.map = {ext_vec(2, {{3, -2 / a}}), ext_vec(2, {{1, a}}),
                  ext_vec(2, {{2, 1 / a}}), ext_vec(2, {{D, a}})};
      } else {
        auto lam = rational_cbrt(alpha * alpha / a);
        auto mu = rational_cbrt(a * a / alpha);
        if (lam && mu) {
          Rational l = *lam, m = *mu;
          fi.map = {ext_vec(2, {{1, -m}, {3, -l}}), ext_vec(2, {{1, -m}, {3, l}}),
                    ext_vec(2, {{D, 1 / (2 * l)}, {2, Rational(-1) / (2 * m)}}),
                    ext_vec(2, {{D, 1 / l}, {2, 1 / m}})};
        } else {
          fi.map_rational = false;
        }
      }
      out.push_back(std::move(fi));
    }
}

void add_dim4_cbrt_points(std::vector<FamilyInstance>& out) {
  // Extra rational cube-root points outside the +/-2 grid.
  for (auto [av, al] : {std::pair<long, long>{8, 1}, {1, 8}}) {
    LieSuperalgebra seed = seed_p2();
    auto s = seed.space();
    Rational a(av), alpha(al);
    ExtensionSpec spec{seed, op_entry(s, Parity::odd, 0, 1, a),
                       vec_of(s, {{0, alpha}}), ExtVariant::odd_periplectic};
    Rational l = *rational_cbrt(alpha * alpha / a);
    Rational m = *rational_cbrt(a * a / alpha);
    std::vector<RatVec> map = {
        ext_vec(2, {{1, -m}, {3, -l}}), ext_vec(2, {{1, -m}, {3, l}}),
        ext_vec(2, {{0, 1 / (2 * l)}, {2, Rational(-1) / (2 * m)}}),
        ext_vec(2, {{0, 1 / l}, {2, 1 / m}})};
    out.push_back({"odd-periplectic xi=(0 a;0 0)",
                   params({{"a", a}, {"alpha", alpha}}), spec, "g4-dim4", map});
  }
}

void add_dim5_families(std::vector<FamilyInstance>& out) {
  const std::size_t D = 0;
  // even admissible, ξ = 0.
  for (long a : kGrid)
    for (long b : kGrid) {
      LieSuperalgebra seed = seed_s3();
      auto s = seed.space();
      Rational al(a), be(b);
      ExtensionSpec spec{seed, LinearOperator::zero(s, Parity::even),
                         vec_of(s, {{0, al}, {1, be}}),
                         ExtVariant::even_orthosymplectic};
      FamilyInstance fi{"dim5 even-admissible xi=0",
                        params({{"alpha", al}, {"beta", be}}), spec, "g1-dim5",
                        std::nullopt};
      if (a != 0 || b != 0) {
        std::vector<RatVec> map;
        if (b != 0)
          map = {ext_vec(3, {{1, -1 / be}}), ext_vec(3, {{D, 1}}),
                 ext_vec(3, {{4, -1}}), ext_vec(3, {{1, -al}, {2, -be}}),
                 ext_vec(3, {{3, 1}})};
        else
          map = {ext_vec(3, {{2, 1 / al}}), ext_vec(3, {{D, 1}}),
                 ext_vec(3, {{4, -1}}), ext_vec(3, {{1, -al}}),
                 ext_vec(3, {{3, 1}})};
        fi.map = map;
      }
      out.push_back(std::move(fi));
    }

  // even admissible, ξ(e2) = a·e1, b₀ = α·e1.
  for (long av : kGridNonzero)
    for (long al : kGrid) {
      LieSuperalgebra seed = seed_s3();
      auto s = seed.space();
      Rational a(av), alpha(al);
      ExtensionSpec spec{seed, op_entry(s, Parity::even, 0, 1, a),
                         vec_of(s, {{0, alpha}}),
                         ExtVariant::even_orthosymplectic};
      Rational t = (alpha + 1) / (3 * a);
      std::vector<RatVec> map = {
          ext_vec(3, {{D, 3 * a}, {2, alpha}}), ext_vec(3, {{D, 1}, {2, t}}),
          ext_vec(3, {{4, alpha}, {1, -3 * a}}), ext_vec(3, {{4, -t}, {1, 1}}),
          ext_vec(3, {{3, 1}})};
      out.push_back({"dim5 even-admissible xi=(0 a 0;0 0 0;0 0 0)",
                     params({{"a", a}, {"alpha", alpha}}), spec, "g1-dim5", map});
    }

  // odd admissible, ξ = 0.
  for (long a : kGrid)
    for (long b : kGrid) {
      LieSuperalgebra seed = seed_s3();
      auto s = seed.space();
      Rational al(a), be(b);
      ExtensionSpec spec{seed, LinearOperator::zero(s, Parity::odd),
                         vec_of(s, {{0, al}, {1, be}}),
                         ExtVariant::odd_orthosymplectic};
      FamilyInstance fi{"dim5 odd-admissible xi=0",
                        params({{"alpha", al}, {"beta", be}}), spec, "g2-dim5",
                        std::nullopt};
      if (a != 0 || b != 0) {
        std::vector<RatVec> map;
        if (b != 0)
          map = {ext_vec(3, {{1, 1 / be}}), ext_vec(3, {{2, 2 * be}, {1, 2 * al}}),
                 ext_vec(3, {{D, 1}}), ext_vec(3, {{4, 1}}), ext_vec(3, {{3, 1}})};
        else
          map = {ext_vec(3, {{2, -1 / al}}), ext_vec(3, {{1, 2 * al}}),
                 ext_vec(3, {{D, 1}}), ext_vec(3, {{4, 1}}), ext_vec(3, {{3, 1}})};
        fi.map = map;
      }
      out.push_back(std::move(fi));
    }
}

}  // namespace

bool ClassificationReport::all_ok() const {
  for (const auto& r : rows) {
    if (!r.admissible || !r.flat || !r.nilpotent) return false;
    if (r.map_status == "FAILED") return false;
    if (!r.abelian && r.matched_form == "-") return false;
  }
  return !rows.empty();
}

ClassificationReport verify_classification(int dimension) {
  if (dimension != 4 && dimension != 5)
    throw UsageError("classification is implemented for dimensions 4 and 5");
  std::vector<FamilyInstance> families;
  if (dimension == 4) {
    add_dim4_families(families);
    add_dim4_cbrt_points(families);
  } else {
    add_dim5_families(families);
  }
  auto entries = load_catalog();

  ClassificationReport report;
  report.dimension = dimension;
  for (auto& fi : families) {
    ClassificationRow row;
    row.family = fi.family;
    row.parameters = fi.parameters;
    row.admissible = check_admissible(fi.spec).empty();
    if (!row.admissible) {
      row.matched_form = "-";
      row.map_status = "-";
      report.rows.push_back(std::move(row));
      continue;
    }
    DoubleExtension ext = double_extend(fi.spec);
    row.flat = is_flat(ext.algebra);
    row.nilpotent = series(ext.algebra).is_nilpotent;
    row.abelian = ext.algebra.is_abelian();
    if (row.abelian) {
      row.matched_form = "abelian";
      row.map_status = "-";
    } else if (!fi.map) {
      row.matched_form = fi.map_rational ? "-" : fi.normal_form;
      row.map_status = fi.map_rational ? "-" : "skipped";
    } else {
      row.matched_form = fi.normal_form;
      MorphismClaim claim{catalog_entry(entries, fi.normal_form).algebra,
                          ext.algebra,
                          Matrix::from_columns(ext.algebra.dim(), *fi.map), true};
      row.map_status = verify_morphism(claim).empty() ? "ok" : "FAILED";
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace qf
