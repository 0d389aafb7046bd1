#include <doctest.h>

#include "oracles.hpp"
#include "qf/catalog.hpp"
#include "qf/reference.hpp"

using namespace qf;

namespace {

LieSuperalgebra d5() {
  auto entries = load_catalog();
  return catalog_entry(entries, "D5").algebra;
}

LieSuperalgebra k_h3() {
  auto entries = load_catalog();
  return catalog_entry(entries, "K+h3").algebra;
}

LieSuperalgebra abelian_with_form(std::size_t n_even, std::size_t n_odd) {
  std::vector<std::string> evens, odds;
  for (std::size_t i = 0; i < n_even; ++i) evens.push_back("e" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n_odd; ++i) odds.push_back("f" + std::to_string(i + 1));
  auto s = make_space(evens, odds);
  std::vector<WedgeTerm> terms;
  for (std::size_t i = 0; i + 1 < n_even; i += 2) terms.push_back({i, i + 1, rat(1)});
  for (std::size_t i = 0; i < n_odd; ++i)
    terms.push_back({n_even + i, n_even + i, rat(1)});
  return LieSuperalgebra(s, ProductTable(s), wedge_form(terms, s, Parity::even));
}

}  // namespace

TEST_CASE("validate: abelian algebra with a nondegenerate form is clean") {
  CHECK(validate(abelian_with_form(2, 1)).empty());
}

TEST_CASE("validate: D5 is clean") { CHECK(validate(d5()).empty()); }

TEST_CASE("validate: flipping one omega entry breaks closedness on a named triple") {
  auto g = d5();
  auto s = g.space();
  Matrix vals = g.form()->values();
  // flip ω(e2,f2) to −1
  vals.at(1, 3) = rat(-1);
  vals.at(3, 1) = rat(1);
  LieSuperalgebra broken(s, g.bracket(), BilinearForm(s, Parity::odd, vals));
  auto violations = validate(broken);
  REQUIRE(!violations.empty());
  bool found_closedness = false;
  for (const auto& v : violations)
    if (v.rule == "closedness" && !v.where.empty()) found_closedness = true;
  CHECK(found_closedness);
}

TEST_CASE("validate: a bracket violating Jacobi is caught") {
  // [x1,x2] = x2, [x1,x3] = x3, [x2,x3] = x1 fails Jacobi on (x1,x2,x3).
  auto s = make_space({"x1", "x2", "x3"}, {});
  ProductTable br = make_bracket(
      s, {{0, 1, basis_vector(s, 1).coords},
          {0, 2, basis_vector(s, 2).coords},
          {1, 2, basis_vector(s, 0).coords}});
  LieSuperalgebra g(s, br, std::nullopt);
  auto violations = validate(g);
  bool found = false;
  for (const auto& v : violations)
    if (v.rule == "jacobi") found = true;
  CHECK(found);
}

TEST_CASE("two Jacobi formulations agree up to the overall sign") {
  // Evaluate the graded cyclic Jacobi sum both ways on an arbitrary
  // anti-symmetric (not necessarily Lie) bracket.
  auto s = make_space({"e1"}, {"f1", "f2"});
  ProductTable br = make_bracket(
      s, {{0, 1, basis_vector(s, 2).coords},   // [e1,f1] = f2
          {1, 1, basis_vector(s, 0).coords},   // [f1,f1] = e1
          {1, 2, basis_vector(s, 0).coords}}); // [f1,f2] = e1
  const std::size_t n = 3;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto bv = [&](std::size_t t) { return basis_vector(s, t).coords; };
        auto sgn2 = [&](std::size_t a, std::size_t b) {
          return Rational(sign_of(s->parity(a), s->parity(b)));
        };
        RatVec cyclic(n), alt(n);
        RatVec t1 = br.apply(br.product(i, j), bv(k));
        RatVec t2 = br.apply(br.product(j, k), bv(i));
        RatVec t3 = br.apply(br.product(k, i), bv(j));
        for (std::size_t m = 0; m < n; ++m) {
          cyclic[m] = sgn2(i, k) * t1[m] + sgn2(j, i) * t2[m] + sgn2(k, j) * t3[m];
          alt[m] = t1[m] + sgn2(i, j) * sgn2(i, k) * t2[m] +
                   sgn2(j, k) * sgn2(i, k) * t3[m];
        }
        CHECK(alt == rat_vec_scale(sgn2(i, k), cyclic));
      }
}

TEST_CASE("center computations") {
  SUBCASE("abelian -> whole space") {
    CHECK(center(abelian_with_form(2, 0)).size() == 2);
  }
  SUBCASE("K+h3 -> span{x3,x4}") {
    auto g = k_h3();
    auto z = center(g);
    std::vector<RatVec> expected{basis_vector(g.space(), 2).coords,
                                 basis_vector(g.space(), 3).coords};
    CHECK(subspace_equal(z, expected, 4));
  }
  SUBCASE("D5 -> zero") { CHECK(center(d5()).empty()); }
}

TEST_CASE("derived subalgebras") {
  CHECK(derived_subalgebra(abelian_with_form(2, 0)).empty());
  auto g = d5();
  std::vector<RatVec> expected{basis_vector(g.space(), 2).coords,
                               basis_vector(g.space(), 3).coords};
  CHECK(subspace_equal(derived_subalgebra(g), expected, 4));

  auto entries = load_catalog();
  const auto& g4 = catalog_entry(entries, "g4-dim4").algebra;
  std::vector<RatVec> expected4{basis_vector(g4.space(), 0).coords,
                                basis_vector(g4.space(), 1).coords};
  CHECK(subspace_equal(derived_subalgebra(g4), expected4, 4));
}

TEST_CASE("series reports") {
  SUBCASE("abelian") {
    auto rep = series(abelian_with_form(2, 0));
    CHECK(rep.is_nilpotent);
    CHECK(rep.is_solvable);
    CHECK(rep.lcs_dims == std::vector<std::size_t>{2, 0});
  }
  SUBCASE("g2-dim4 is nilpotent") {
    auto entries = load_catalog();
    CHECK(series(catalog_entry(entries, "g2-dim4").algebra).is_nilpotent);
  }
  SUBCASE("D5 is solvable but not nilpotent") {
    auto rep = series(d5());
    CHECK(!rep.is_nilpotent);
    CHECK(rep.is_solvable);
    CHECK(rep.lcs_dims == std::vector<std::size_t>{4, 2, 2});
  }
  SUBCASE("K+h3 has a degenerate center") {
    auto rep = series(k_h3());
    REQUIRE(rep.center_degenerate.has_value());
    CHECK(*rep.center_degenerate);
    auto g = k_h3();
    auto z = center(g);
    auto meet = subspace_intersection(z, orthogonal_complement(z, *g.form()), 4);
    CHECK(subspace_contains(meet, basis_vector(g.space(), 2).coords, 4));
  }
}

TEST_CASE("normalizers") {
  SUBCASE("abelian with the zero product") {
    auto g = abelian_with_form(2, 0);
    auto norm = normalizers(g, ProductTable(g.space()));
    CHECK(norm.left.size() == 2);
    CHECK(norm.right.size() == 2);
    CHECK(norm.two_sided.size() == 2);
  }
  SUBCASE("natural product on K+h3: N_r = Z") {
    auto g = k_h3();
    ProductTable star = natural_symplectic_product(g);
    auto norm = normalizers(g, star);
    CHECK(subspace_equal(norm.right, center(g), 4));
  }
  SUBCASE("Levi-Civita on quasi-Frobenius algebras: N_l = [g,g]perp") {
    auto entries = load_catalog();
    for (const auto& name : {"D5", "C3+A", "K+h3", "g3-dim4", "g4-dim4"}) {
      const auto& g = catalog_entry(entries, name).algebra;
      ProductTable lc = levi_civita_product(g);
      auto norm = normalizers(g, lc);
      auto perp = orthogonal_complement(derived_subalgebra(g), *g.form());
      CHECK(subspace_equal(norm.left, perp, g.dim()));
    }
  }
}

TEST_CASE("no nondegenerate odd form exists on unequal even/odd dimensions") {
  auto s = make_space({"e1", "e2"}, {"f1"});
  Matrix vals(3, 3);
  vals.at(0, 2) = 1;
  vals.at(2, 0) = -1;
  BilinearForm omega(s, Parity::odd, vals);
  CHECK(!is_nondegenerate(omega));
}

TEST_CASE("change_of_basis round trip") {
  auto g = k_h3();
  std::vector<RatVec> new_basis{
      rat_vec_scale(rat(2), basis_vector(g.space(), 0).coords),
      basis_vector(g.space(), 1).coords,
      rat_vec_scale(rat(2), basis_vector(g.space(), 2).coords),
      basis_vector(g.space(), 3).coords};
  auto h = change_of_basis(g, {"y1", "y2", "y3", "y4"}, new_basis);
  CHECK(validate(h).empty());
  // [y1,y2] = 2[x1,x2] = 2 x3 = y3
  CHECK(h.bracket().product(0, 1) == basis_vector(h.space(), 2).coords);
  CHECK(h.form()->value(0, 3) == rat(2));
}
