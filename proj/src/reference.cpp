#include "qf/reference.hpp"

namespace qf::ref {

namespace {

int psign(const SpacePtr& s, std::size_t a, std::size_t b) {
  return sign_of(s->parity(a), s->parity(b));
}

}  // namespace

std::vector<Violation> jacobi_violations(const LieSuperalgebra& g) {
  const auto& s = g.space();
  const auto& br = g.bracket();
  const std::size_t n = g.dim();
  std::vector<Violation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        RatVec sum(n);
        RatVec t1 = br.apply(br.product(i, j), basis_vector(s, k).coords);
        RatVec t2 = br.apply(br.product(j, k), basis_vector(s, i).coords);
        RatVec t3 = br.apply(br.product(k, i), basis_vector(s, j).coords);
        for (std::size_t m = 0; m < n; ++m)
          sum[m] = Rational(psign(s, i, k)) * t1[m] +
                   Rational(psign(s, j, i)) * t2[m] +
                   Rational(psign(s, k, j)) * t3[m];
        if (!rat_vec_is_zero(sum))
          out.push_back({"jacobi",
                         "(" + s->name(i) + "," + s->name(j) + "," + s->name(k) + ")",
                         "graded cyclic sum nonzero"});
      }
  return out;
}

std::vector<Violation> closedness_violations(const LieSuperalgebra& g) {
  if (!g.form()) return {};
  const auto& s = g.space();
  const auto& br = g.bracket();
  const auto& omega = *g.form();
  const std::size_t n = g.dim();
  std::vector<Violation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        Rational sum =
            Rational(psign(s, i, k)) *
                omega.eval(br.product(i, j), basis_vector(s, k).coords) +
            Rational(psign(s, j, i)) *
                omega.eval(br.product(j, k), basis_vector(s, i).coords) +
            Rational(psign(s, k, j)) *
                omega.eval(br.product(k, i), basis_vector(s, j).coords);
        if (!is_zero(sum))
          out.push_back({"closedness",
                         "(" + s->name(i) + "," + s->name(j) + "," + s->name(k) + ")",
                         "cyclic sum = " + to_string(sum)});
      }
  return out;
}

namespace {

template <bool Left>
std::vector<Violation> symmetry_scan(const ProductTable& p) {
  const auto& s = p.space();
  const std::size_t n = p.dim();
  std::vector<Violation> out;
  auto assoc = [&](std::size_t x, std::size_t y, std::size_t z) {
    return rat_vec_sub(p.apply(p.product(x, y), basis_vector(s, z).coords),
                       p.apply(basis_vector(s, x).coords, p.product(y, z)));
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        RatVec lhs = assoc(a, b, c);
        RatVec rhs = Left ? assoc(b, a, c) : assoc(a, c, b);
        int sg = Left ? psign(s, a, b) : psign(s, b, c);
        if (lhs != rat_vec_scale(Rational(sg), rhs))
          out.push_back({Left ? "left-symmetry" : "right-symmetry",
                         "(" + s->name(a) + "," + s->name(b) + "," + s->name(c) + ")",
                         "associator identity failed"});
      }
  return out;
}

}  // namespace

std::vector<Violation> left_symmetry_violations(const ProductTable& p) {
  return symmetry_scan<true>(p);
}

std::vector<Violation> right_symmetry_violations(const ProductTable& p) {
  return symmetry_scan<false>(p);
}

Curvature curvature(const LieSuperalgebra& g, const ProductTable& p) {
  const std::size_t n = g.dim();
  const auto& s = g.space();
  Curvature r{s, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LinearOperator l_bracket =
          LinearOperator::zero(s, s->parity(i) + s->parity(j));
      RatVec br = g.bracket().product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(br[k])) l_bracket = l_bracket + p.left_mult(k).scaled(br[k]);
      r.ops.push_back(l_bracket - LinearOperator::super_commutator(p.left_mult(i),
                                                                   p.left_mult(j)));
    }
  return r;
}

ProductTable natural_symplectic_product(const LieSuperalgebra& g) {
  const auto& s = g.space();
  const auto& omega = *g.form();
  const auto& br = g.bracket();
  const std::size_t n = g.dim();
  Matrix lhs(n, n);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t k = 0; k < n; ++k) lhs.at(w, k) = omega.value(k, w);
  ProductTable out(g.space());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RatVec rhs(n);
      for (std::size_t w = 0; w < n; ++w) {
        Rational v = omega.eval(br.product(i, j), basis_vector(s, w).coords);
        v += Rational(psign(s, j, w)) *
             omega.eval(br.product(i, w), basis_vector(s, j).coords);
        rhs[w] = v / 3;
      }
      auto sol = solve_linear(lhs, rhs);
      if (!sol) throw std::logic_error("reference natural product inconsistent");
      out.set_product(i, j, sol->particular);
    }
  return out;
}

}  // namespace qf::ref
