#include "oracles.hpp"

namespace qf::oracle {

BilinearForm wedge_by_pairing(const std::vector<WedgeTerm>& terms,
                              const SpacePtr& space, Parity parity) {
  const std::size_t n = space->dim();
  Matrix m(n, n);
  for (const auto& t : terms) {
    // Two tensor summands (x*, y*, coefficient).
    struct Summand {
      std::size_t x, y;
      Rational c;
    };
    Summand summands[2] = {
        {t.i, t.j, t.coeff},
        {t.j, t.i, Rational(-sign_of(space->parity(t.i), space->parity(t.j))) *
                       t.coeff}};
    for (const auto& sm : summands) {
      // ⟨x*⊗y*, b_p⊗b_q⟩ = (−1)^{|y||p|} δ_{x,p} δ_{y,q}
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (sm.x == p && sm.y == q)
            m.at(p, q) += Rational(sign_of(space->parity(sm.y), space->parity(p))) *
                          sm.c;
    }
  }
  return BilinearForm(space, parity, std::move(m));
}

LinearOperator adjoint_by_bruteforce(const LinearOperator& f,
                                     const BilinearForm& omega) {
  const auto& s = f.space();
  const std::size_t n = s->dim();
  // Unknowns X(k,j) flattened as k*n+j; equations over all pairs (i,j):
  //   (−1)^{|f||i|} Σ_k ω(b_i,b_k) X(k,j) = ω(f(b_i), b_j)
  Matrix sys(n * n, n * n);
  RatVec rhs(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k)
        sys.at(row, k * n + j) =
            Rational(sign_of(f.parity(), s->parity(i))) * omega.value(i, k);
      rhs[row] = omega.eval(f.matrix().column(i), basis_vector(s, j).coords);
    }
  auto sol = solve_linear(sys, rhs);
  if (!sol || !sol->nullspace.empty())
    throw std::logic_error("adjoint oracle: system not uniquely solvable");
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) out.at(k, j) = sol->particular[k * n + j];
  return LinearOperator(s, f.parity(), std::move(out));
}

std::optional<ProductTable> koszul_joint_solution(const LieSuperalgebra& g) {
  const auto& s = g.space();
  const auto& omega = *g.form();
  const std::size_t n = g.dim();
  const std::size_t unknowns = n * n * n;
  auto idx = [n](std::size_t i, std::size_t j, std::size_t k) {
    return (i * n + j) * n + k;
  };
  std::vector<RatVec> rows;
  RatVec rhs;
  // A product table is an even bilinear map: x_{ijk} = 0 off the grading.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (s->parity(k) != s->parity(i) + s->parity(j)) {
          RatVec row(unknowns);
          row[idx(i, j, k)] = 1;
          rows.push_back(std::move(row));
          rhs.push_back(0);
        }
  // Torsion: x_{ijk} − (−1)^{|i||j|} x_{jik} = c_{ij}^k.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int sg = sign_of(s->parity(i), s->parity(j));
      for (std::size_t k = 0; k < n; ++k) {
        RatVec row(unknowns);
        row[idx(i, j, k)] += 1;
        row[idx(j, i, k)] -= Rational(sg);
        rows.push_back(std::move(row));
        rhs.push_back(g.bracket().coeff(i, j, k));
      }
    }
  // Form-symmetry of left multiplications:
  //   Σ_k x_{uvk} ω(b_k,b_w) = (−1)^{|u||v|} Σ_k x_{uwk} ω(b_v,b_k).
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        RatVec row(unknowns);
        for (std::size_t k = 0; k < n; ++k) {
          row[idx(u, v, k)] += omega.value(k, w);
          row[idx(u, w, k)] -=
              Rational(sign_of(s->parity(u), s->parity(v))) * omega.value(v, k);
        }
        rows.push_back(std::move(row));
        rhs.push_back(0);
      }
  Matrix sys = Matrix::from_rows(unknowns, rows);
  auto sol = solve_linear(sys, rhs);
  if (!sol || !sol->nullspace.empty()) return std::nullopt;
  std::vector<Rational> tensor(unknowns);
  for (std::size_t t = 0; t < unknowns; ++t) tensor[t] = sol->particular[t];
  return ProductTable(g.space(), std::move(tensor));
}

std::optional<std::array<Rational, 3>> natural_ansatz_coeffs(
    const LieSuperalgebra& g) {
  const auto& s = g.space();
  const auto& omega = *g.form();
  const std::size_t n = g.dim();
  // ω(u⋆v,w) = a·A + b·B + c·C with the three bracket pairings.
  auto abc = [&](std::size_t u, std::size_t v, std::size_t w) {
    std::array<Rational, 3> out;
    out[0] = omega.eval(g.bracket().product(u, v), basis_vector(s, w).coords);
    int s_vw = sign_of(s->parity(v), s->parity(w));
    out[1] = Rational(s_vw) *
             omega.eval(g.bracket().product(u, w), basis_vector(s, v).coords);
    out[2] = Rational(s_vw) *
             omega.eval(g.bracket().product(v, w), basis_vector(s, u).coords);
    return out;
  };
  std::vector<RatVec> rows;
  RatVec rhs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        auto uvw = abc(u, v, w);
        // Torsion: ω(u⋆v,w) − (−1)^{|u||v|} ω(v⋆u,w) = ω([u,v],w).
        auto vuw = abc(v, u, w);
        RatVec row(3);
        int s_uv = sign_of(s->parity(u), s->parity(v));
        for (int t = 0; t < 3; ++t) row[t] = uvw[t] - Rational(s_uv) * vuw[t];
        rows.push_back(row);
        rhs.push_back(
            omega.eval(g.bracket().product(u, v), basis_vector(s, w).coords));
        // Anti-symmetry: ω(u⋆v,w) + (−1)^{|u||v|} ω(v, u⋆w) = 0, where
        // ω(v,x) = −(−1)^{|v||x|} ω(x,v) and |x| = |u|+|w|.
        auto uwv = abc(u, w, v);
        int s_vx = sign_of(s->parity(v), s->parity(u) + s->parity(w));
        RatVec row2(3);
        for (int t = 0; t < 3; ++t)
          row2[t] = uvw[t] - Rational(s_uv) * Rational(s_vx) * uwv[t];
        rows.push_back(row2);
        rhs.push_back(0);
      }
  Matrix sys = Matrix::from_rows(3, rows);
  auto sol = solve_linear(sys, rhs);
  if (!sol) return std::nullopt;
  RatVec coeffs = sol->particular;
  // The closedness identity ties the three pairings together, so the raw
  // coefficients are determined only modulo that one relation; the slice
  // c = 0 picks the canonical representative.
  if (!sol->nullspace.empty()) {
    if (sol->nullspace.size() != 1) return std::nullopt;
    const RatVec& dir = sol->nullspace.front();
    if (is_zero(dir[2])) return std::nullopt;
    Rational t = -coeffs[2] / dir[2];
    coeffs = rat_vec_add(coeffs, rat_vec_scale(t, dir));
  }
  return std::array<Rational, 3>{coeffs[0], coeffs[1], coeffs[2]};
}

LieSuperalgebra direct_sum(const LieSuperalgebra& g1, const LieSuperalgebra& g2) {
  if (!g1.form() || !g2.form() || g1.form()->parity() != g2.form()->parity())
    throw UsageError("direct_sum needs forms of equal parity");
  const std::size_t n1 = g1.dim(), n2 = g2.dim(), n = n1 + n2;
  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (std::size_t i = 0; i < n1; ++i) {
    names.push_back("a." + g1.space()->name(i));
    parities.push_back(g1.space()->parity(i));
  }
  for (std::size_t i = 0; i < n2; ++i) {
    names.push_back("b." + g2.space()->name(i));
    parities.push_back(g2.space()->parity(i));
  }
  SpacePtr s = make_space_with_parities(names, parities);
  ProductTable bracket(s);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      RatVec c(n);
      RatVec src = g1.bracket().product(i, j);
      for (std::size_t k = 0; k < n1; ++k) c[k] = src[k];
      bracket.set_product(i, j, c);
    }
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      RatVec c(n);
      RatVec src = g2.bracket().product(i, j);
      for (std::size_t k = 0; k < n2; ++k) c[n1 + k] = src[k];
      bracket.set_product(n1 + i, n1 + j, c);
    }
  Matrix vals(n, n);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) vals.at(i, j) = g1.form()->value(i, j);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      vals.at(n1 + i, n1 + j) = g2.form()->value(i, j);
  BilinearForm omega(s, g1.form()->parity(), std::move(vals));
  return LieSuperalgebra(s, std::move(bracket), std::move(omega));
}

bool same_algebra(const LieSuperalgebra& g1, const LieSuperalgebra& g2) {
  if (g1.dim() != g2.dim()) return false;
  if (!(g1.bracket().raw() == g2.bracket().raw())) return false;
  if (g1.form().has_value() != g2.form().has_value()) return false;
  if (g1.form() && !(g1.form()->values() == g2.form()->values())) return false;
  return true;
}

}  // namespace qf::oracle
