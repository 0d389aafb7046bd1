#include <doctest.h>

#include "oracles.hpp"
#include "qf/bilinear_form.hpp"
#include "qf/subspace.hpp"

using namespace qf;

namespace {

// Deterministic rational "random" stream for property-style checks.
struct RatStream {
  unsigned long state = 0x9e3779b9UL;
  long next_int(long lo, long hi) {
    state = state * 6364136223846793005UL + 1442695040888963407UL;
    return lo + static_cast<long>((state >> 33) % (hi - lo + 1));
  }
  Rational next() {
    long num = next_int(-6, 6);
    long den = next_int(1, 4);
    return rat(num, den);
  }
};

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(*parse_rational("2/4") == rat(1, 2));
  CHECK(*parse_rational("-3") == rat(-3));
  CHECK(to_string(rat(-4, 6)) == "-2/3");
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("a").has_value());
  CHECK(!parse_rational("1.5").has_value());
}

TEST_CASE("solve_linear identity case") {
  Matrix a = Matrix::identity(2);
  auto sol = solve_linear(a, {rat(1), rat(2)});
  REQUIRE(sol.has_value());
  CHECK(sol->particular == RatVec{rat(1), rat(2)});
  CHECK(sol->nullspace.empty());
}

TEST_CASE("solve_linear zero map") {
  Matrix a(1, 1);
  auto sol = solve_linear(a, {rat(0)});
  REQUIRE(sol.has_value());
  CHECK(sol->particular == RatVec{rat(0)});
  REQUIRE(sol->nullspace.size() == 1);
  CHECK(sol->nullspace[0] == RatVec{rat(1)});
}

TEST_CASE("solve_linear inconsistent rows") {
  Matrix a(2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 1;
  a.at(1, 0) = 2; a.at(1, 1) = 2;
  CHECK(!solve_linear(a, {rat(1), rat(3)}).has_value());
}

TEST_CASE("solve_linear satisfies A x = b on random systems") {
  RatStream rs;
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 1 + trial % 5, cols = 1 + (trial * 7) % 5;
    Matrix a(rows, cols);
    RatVec x(cols);
    for (auto& q : x) q = rs.next();
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = rs.next();
    RatVec b = a * x;
    auto sol = solve_linear(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * sol->particular == b);
    for (const auto& k : sol->nullspace) CHECK(rat_vec_is_zero(a * k));
  }
}

TEST_CASE("matrix inverse and rank") {
  Matrix a(2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 2;
  a.at(1, 0) = 3; a.at(1, 1) = 4;
  REQUIRE(a.invertible());
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv * a == Matrix::identity(2));
  Matrix b(2, 2);
  b.at(0, 0) = 1; b.at(1, 0) = 2;
  CHECK(b.rank() == 1);
}

TEST_CASE("wedge matches the pairing expansion") {
  SUBCASE("classical plane") {
    auto s = make_space({"e1", "e2"}, {});
    std::vector<WedgeTerm> terms{{0, 1, rat(1)}};
    auto w = wedge_form(terms, s, Parity::even);
    CHECK(w.value(0, 1) == rat(1));
    CHECK(w.value(1, 0) == rat(-1));
    CHECK(w.values() == oracle::wedge_by_pairing(terms, s, Parity::even).values());
  }
  SUBCASE("odd-odd diagonal") {
    auto s = make_space({}, {"f1"});
    std::vector<WedgeTerm> terms{{0, 0, rat(1)}};
    auto w = wedge_form(terms, s, Parity::even);
    // The graded pairing makes f*∧f* evaluate to −2 on (f,f).
    CHECK(w.value(0, 0) == rat(-2));
    CHECK(w.values() == oracle::wedge_by_pairing(terms, s, Parity::even).values());
  }
  SUBCASE("mixed example form") {
    auto s = make_space({"e1", "e2"}, {"f1", "f2"});
    std::vector<WedgeTerm> terms{{0, 1, rat(2)}, {2, 3, rat(-1)}};
    auto w = wedge_form(terms, s, Parity::even);
    CHECK(w.value(0, 1) == rat(2));
    CHECK(w.value(1, 0) == rat(-2));
    CHECK(w.value(2, 3) == rat(1));
    CHECK(w.value(3, 2) == rat(1));
    CHECK(w.values() == oracle::wedge_by_pairing(terms, s, Parity::even).values());
  }
  SUBCASE("parity-inconsistent term is rejected") {
    auto s = make_space({"e1"}, {"f1"});
    CHECK_THROWS_AS(wedge_form({{0, 1, rat(1)}}, s, Parity::even), UsageError);
  }
}

TEST_CASE("nondegeneracy") {
  auto s2 = make_space({"e1", "e2"}, {});
  CHECK(is_nondegenerate(wedge_form({{0, 1, rat(1)}}, s2, Parity::even)));
  CHECK(!is_nondegenerate(BilinearForm::zero(s2, Parity::even)));
  auto sp = make_space({"e1"}, {"f1"});
  auto peri = wedge_form({{0, 1, rat(1)}}, sp, Parity::odd);
  CHECK(is_nondegenerate(peri));
  CHECK(sp->dim_even() == sp->dim_odd());
}

TEST_CASE("adjoint examples and properties") {
  auto s = make_space({"e1", "e2"}, {});
  auto omega = wedge_form({{0, 1, rat(1)}}, s, Parity::even);

  SUBCASE("identity is self-adjoint") {
    auto id = LinearOperator::identity(s);
    CHECK(adjoint(id, omega) == id);
  }
  SUBCASE("frozen example: f(e1)=e2 has f* = -f") {
    Matrix m(2, 2);
    m.at(1, 0) = 1;  // f(e1) = e2
    LinearOperator f(s, Parity::even, m);
    auto f_star = adjoint(f, omega);
    CHECK(f_star == f.scaled(rat(-1)));
    CHECK(f_star == oracle::adjoint_by_bruteforce(f, omega));
  }
  SUBCASE("double adjoint and linearity on random even operators") {
    RatStream rs;
    for (int trial = 0; trial < 10; ++trial) {
      Matrix m(2, 2), m2(2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          m.at(i, j) = rs.next();
          m2.at(i, j) = rs.next();
        }
      LinearOperator f(s, Parity::even, m), h(s, Parity::even, m2);
      CHECK(adjoint(adjoint(f, omega), omega) == f);
      Rational alpha = rs.next(), beta = rs.next();
      CHECK(adjoint(f.scaled(alpha) + h.scaled(beta), omega) ==
            adjoint(f, omega).scaled(alpha) + adjoint(h, omega).scaled(beta));
      CHECK(adjoint(f, omega) == oracle::adjoint_by_bruteforce(f, omega));
    }
  }
}

TEST_CASE("odd adjoints satisfy the defining relation pointwise") {
  auto sp = make_space({"e1"}, {"f1"});
  auto omega = wedge_form({{0, 1, rat(1)}}, sp, Parity::odd);
  Matrix m(2, 2);
  m.at(1, 0) = 2;  // odd map e1 -> 2 f1
  m.at(0, 1) = -3; // f1 -> -3 e1
  LinearOperator f(sp, Parity::odd, m);
  auto f_star = adjoint(f, omega);
  CHECK(f_star == oracle::adjoint_by_bruteforce(f, omega));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rational lhs = omega.eval(f.matrix().column(i),
                                basis_vector(sp, j).coords);
      Rational rhs = Rational(sign_of(f.parity(), sp->parity(i))) *
                     omega.eval(basis_vector(sp, i).coords,
                                f_star.matrix().column(j));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("orthogonal complements") {
  auto s = make_space({"x1", "x2", "x3", "x4"}, {});
  auto omega = wedge_form({{0, 3, rat(1)}, {1, 2, rat(1)}}, s, Parity::even);

  SUBCASE("whole space and zero") {
    std::vector<RatVec> all;
    for (std::size_t i = 0; i < 4; ++i) all.push_back(basis_vector(s, i).coords);
    CHECK(orthogonal_complement(all, omega).empty());
    CHECK(orthogonal_complement(std::vector<RatVec>{}, omega).size() == 4);
  }
  SUBCASE("span{x3} in the four-dimensional example") {
    auto comp = orthogonal_complement({basis_vector(s, 2).coords}, omega);
    // rank of the 1x4 constraint matrix is 1, so the complement has dim 3
    REQUIRE(comp.size() == 3);
    std::vector<RatVec> expected{basis_vector(s, 0).coords,
                                 basis_vector(s, 2).coords,
                                 basis_vector(s, 3).coords};
    CHECK(subspace_equal(comp, expected, 4));
  }
  SUBCASE("double complement is the span") {
    RatStream rs;
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<RatVec> gens;
      for (int v = 0; v < 2; ++v) {
        RatVec g(4);
        for (auto& q : g) q = rs.next();
        gens.push_back(g);
      }
      auto dd = orthogonal_complement(orthogonal_complement(gens, omega), omega);
      CHECK(subspace_equal(dd, span_basis(gens, 4), 4));
    }
  }
}

TEST_CASE("subspace utilities") {
  auto s = make_space({"x1", "x2", "x3"}, {});
  std::vector<RatVec> a{basis_vector(s, 0).coords, basis_vector(s, 1).coords};
  std::vector<RatVec> b{rat_vec_add(basis_vector(s, 0).coords,
                                    basis_vector(s, 1).coords),
                        basis_vector(s, 2).coords};
  auto meet = subspace_intersection(a, b, 3);
  REQUIRE(meet.size() == 1);
  CHECK(subspace_contains(a, meet[0], 3));
  CHECK(subspace_contains(b, meet[0], 3));
}

TEST_CASE("homogeneous basis splits a graded span") {
  auto s = make_space({"e1", "e2"}, {"f1"});
  RatVec mixed(3);
  mixed[0] = 1;
  mixed[2] = 1;  // e1 + f1 spans a graded plane together with e1
  auto basis = homogeneous_basis({mixed, basis_vector(s, 0).coords}, s);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) CHECK(Vec(s, v).is_homogeneous());
}
