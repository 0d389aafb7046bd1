#include <doctest.h>

#include "oracles.hpp"
#include "qf/catalog.hpp"

using namespace qf;

namespace {

std::vector<CatalogEntry> entries() { return load_catalog(); }

LinearOperator entry_op(const SpacePtr& s, Parity p, std::size_t row,
                        std::size_t col, Rational a) {
  Matrix m(s->dim(), s->dim());
  m.at(row, col) = a;
  return LinearOperator(s, p, std::move(m));
}

LieSuperalgebra even_plane() {
  auto s = make_space({"e1", "e2"}, {});
  return LieSuperalgebra(s, ProductTable(s),
                         wedge_form({{0, 1, rat(1)}}, s, Parity::even));
}

LieSuperalgebra periplectic_plane() {
  auto s = make_space({"e1"}, {"f1"});
  return LieSuperalgebra(s, ProductTable(s),
                         wedge_form({{0, 1, rat(1)}}, s, Parity::odd));
}

LieSuperalgebra abelian3() {
  auto s = make_space({"e1", "e2"}, {"f1"});
  return LieSuperalgebra(
      s, ProductTable(s),
      wedge_form({{0, 1, rat(1)}, {2, 2, rat(1)}}, s, Parity::even));
}

}  // namespace

TEST_CASE("catalog loads with all flags re-derived") {
  auto es = entries();
  CHECK(es.size() == 13);
  CHECK(catalog_entry(es, "D5").expected.flat == false);
  CHECK(catalog_entry(es, "g3-dim4").expected.flat == true);
}

TEST_CASE("identity morphism verifies on every entry") {
  for (const auto& e : entries()) {
    MorphismClaim claim{e.algebra, e.algebra, Matrix::identity(e.algebra.dim()),
                        true};
    CHECK(verify_morphism(claim).empty());
  }
}

TEST_CASE("scaling one basis vector breaks bracket preservation") {
  auto es = entries();
  const auto& g = catalog_entry(es, "K+h3").algebra;
  Matrix map = Matrix::identity(4);
  map.at(2, 2) = rat(2);  // scale x3 only
  MorphismClaim claim{g, g, map, false};
  auto violations = verify_morphism(claim);
  REQUIRE(!violations.empty());
  CHECK(violations.front().rule == "bracket-preservation");
  CHECK(violations.front().where == "(x1,x2)");
}

TEST_CASE("singular or parity-violating maps are precondition errors") {
  auto es = entries();
  const auto& g = catalog_entry(es, "K+h3").algebra;
  CHECK_THROWS_AS(verify_morphism(MorphismClaim{g, g, Matrix(4, 4), false}),
                  PreconditionError);
  const auto& g3 = catalog_entry(es, "g3-dim4").algebra;
  Matrix odd_map(4, 4);
  odd_map.at(2, 0) = 1;  // sends even x1 to odd y1
  odd_map.at(0, 2) = 1;
  odd_map.at(1, 3) = 1;
  odd_map.at(3, 1) = 1;
  CHECK_THROWS_AS(verify_morphism(MorphismClaim{g3, g3, odd_map, false}),
                  PreconditionError);
}

TEST_CASE("classification dim 4 matches all normal forms") {
  ClassificationReport rep = verify_classification(4);
  CHECK(rep.all_ok());
  int maps_ok = 0, skipped = 0, abelian = 0;
  bool kh3_at_01 = false, g4_at_11 = false;
  for (const auto& r : rep.rows) {
    if (r.map_status == "ok") ++maps_ok;
    if (r.map_status == "skipped") ++skipped;
    if (r.abelian) ++abelian;
    if (r.family == "even-orthosymplectic xi=0" && r.parameters == "alpha=0 beta=1" &&
        r.matched_form == "K+h3" && r.map_status == "ok")
      kh3_at_01 = true;
    if (r.family == "odd-periplectic xi=(0 a;0 0)" &&
        r.parameters == "a=1 alpha=1" && r.matched_form == "g4-dim4" &&
        r.map_status == "ok")
      g4_at_11 = true;
  }
  CHECK(kh3_at_01);
  CHECK(g4_at_11);
  CHECK(maps_ok > 80);
  CHECK(skipped > 0);   // irrational cube-root points are skipped by design
  CHECK(abelian == 8);  // zero-parameter rows
}

TEST_CASE("classification dim 5 matches all normal forms") {
  ClassificationReport rep = verify_classification(5);
  CHECK(rep.all_ok());
  bool g2_at_10 = false;
  for (const auto& r : rep.rows)
    if (r.family == "dim5 odd-admissible xi=0" && r.parameters == "alpha=1 beta=0" &&
        r.matched_form == "g2-dim5" && r.map_status == "ok")
      g2_at_10 = true;
  CHECK(g2_at_10);
}

TEST_CASE("rational cube roots") {
  CHECK(*rational_cbrt(rat(8)) == rat(2));
  CHECK(*rational_cbrt(rat(-27, 8)) == rat(-3, 2));
  CHECK(!rational_cbrt(rat(2)).has_value());
  CHECK(!rational_cbrt(rat(1, 2)).has_value());
}

TEST_CASE("ten-plus perturbed non-admissible pairs all fail") {
  auto e2 = even_plane();
  auto p2 = periplectic_plane();
  auto s3 = abelian3();
  auto o2s = make_space({}, {"f1", "f2"});
  LieSuperalgebra o2(o2s, ProductTable(o2s),
                     wedge_form({{0, 1, rat(-1)}}, o2s, Parity::even));

  std::vector<ExtensionSpec> bad;
  auto v = [](const SpacePtr& s, std::initializer_list<Rational> cs) {
    return Vec(s, RatVec(cs));
  };
  {
    Matrix diag(2, 2);
    diag.at(0, 0) = 1;
    bad.push_back({e2, LinearOperator(e2.space(), Parity::even, diag),
                   v(e2.space(), {rat(0), rat(0)}),
                   ExtVariant::even_orthosymplectic});
  }
  bad.push_back({e2, entry_op(e2.space(), Parity::even, 0, 1, rat(1)),
                 v(e2.space(), {rat(0), rat(1)}),
                 ExtVariant::even_orthosymplectic});
  bad.push_back({e2, entry_op(e2.space(), Parity::even, 0, 1, rat(1)),
                 v(e2.space(), {rat(1), rat(1)}),
                 ExtVariant::even_orthosymplectic});
  bad.push_back({e2, entry_op(e2.space(), Parity::even, 1, 0, rat(1)),
                 v(e2.space(), {rat(1), rat(0)}),
                 ExtVariant::even_orthosymplectic});
  {
    Matrix diag(2, 2);
    diag.at(0, 0) = 1;
    bad.push_back({o2, LinearOperator(o2.space(), Parity::even, diag),
                   Vec(o2.space(), RatVec(2)), ExtVariant::even_orthosymplectic});
  }
  {
    Matrix diag(2, 2);
    diag.at(0, 0) = 1;
    bad.push_back({p2, LinearOperator(p2.space(), Parity::even, diag),
                   v(p2.space(), {rat(0), rat(0)}), ExtVariant::even_periplectic});
  }
  bad.push_back({p2, entry_op(p2.space(), Parity::odd, 1, 0, rat(1)),
                 v(p2.space(), {rat(1), rat(0)}), ExtVariant::odd_periplectic});
  {
    Matrix both(2, 2);
    both.at(0, 1) = 1;
    both.at(1, 0) = 1;
    bad.push_back({p2, LinearOperator(p2.space(), Parity::odd, both),
                   v(p2.space(), {rat(0), rat(0)}), ExtVariant::odd_periplectic});
  }
  {
    Matrix diag(3, 3);
    diag.at(2, 2) = 1;
    bad.push_back({s3, LinearOperator(s3.space(), Parity::even, diag),
                   v(s3.space(), {rat(0), rat(0), rat(0)}),
                   ExtVariant::even_orthosymplectic});
  }
  bad.push_back({s3, entry_op(s3.space(), Parity::even, 0, 1, rat(1)),
                 v(s3.space(), {rat(0), rat(1), rat(0)}),
                 ExtVariant::even_orthosymplectic});
  bad.push_back({s3, entry_op(s3.space(), Parity::odd, 2, 0, rat(1)),
                 v(s3.space(), {rat(0), rat(0), rat(0)}),
                 ExtVariant::odd_orthosymplectic});
  bad.push_back({s3, entry_op(s3.space(), Parity::odd, 2, 1, rat(1)),
                 v(s3.space(), {rat(0), rat(0), rat(0)}),
                 ExtVariant::odd_orthosymplectic});

  REQUIRE(bad.size() >= 10);
  for (const auto& spec : bad) CHECK(!check_admissible(spec).empty());
}

TEST_CASE("every two-dimensional flat algebra in reach is abelian") {
  // Even plane with a parametric bracket [e1,e2] = a e1 + b e2; validity
  // plus flatness must force the zero bracket.
  for (long a : {-2L, -1L, 0L, 1L, 2L})
    for (long b : {-2L, -1L, 0L, 1L, 2L}) {
      auto s = make_space({"e1", "e2"}, {});
      RatVec c(2);
      c[0] = rat(a);
      c[1] = rat(b);
      LieSuperalgebra g(s, make_bracket(s, {{0, 1, c}}),
                        wedge_form({{0, 1, rat(1)}}, s, Parity::even));
      if (!validate(g).empty()) continue;
      if (is_flat(g)) CHECK((a == 0 && b == 0));
      if (a == 0 && b == 0) CHECK(is_flat(g));
    }
  // Periplectic plane with [e,f] = c f, [f,f] = d e; same conclusion.
  for (long cval : {-2L, -1L, 0L, 1L, 2L})
    for (long dval : {-2L, -1L, 0L, 1L, 2L}) {
      auto s = make_space({"e1"}, {"f1"});
      RatVec ef(2), ff(2);
      ef[1] = rat(cval);
      ff[0] = rat(dval);
      LieSuperalgebra g(s, make_bracket(s, {{0, 1, ef}, {1, 1, ff}}),
                        wedge_form({{0, 1, rat(1)}}, s, Parity::odd));
      if (!validate(g).empty()) continue;
      if (is_flat(g)) CHECK((cval == 0 && dval == 0));
    }
}

TEST_CASE("flat entries obey the structure theorems") {
  for (const auto& e : entries()) {
    if (!e.expected.flat) continue;
    auto rep = series(e.algebra);
    CHECK(rep.is_nilpotent);
    CHECK(rep.is_solvable);
    if (e.expected.non_abelian) {
      REQUIRE(rep.center_degenerate.has_value());
      CHECK(*rep.center_degenerate);
    }
  }
}
