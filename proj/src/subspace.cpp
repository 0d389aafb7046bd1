#include "qf/subspace.hpp"

#include <algorithm>

namespace qf {

namespace {

// Echelonize rows in place (reduced form), dropping zero rows.
std::vector<RatVec> echelon_rows(std::vector<RatVec> rows, std::size_t dim) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace

std::size_t span_rank(const std::vector<RatVec>& gens, std::size_t dim) {
  return span_basis(gens, dim).size();
}

std::vector<RatVec> span_basis(const std::vector<RatVec>& gens, std::size_t dim) {
  for (const auto& g : gens)
    if (g.size() != dim) throw UsageError("span generator dimension mismatch");
  return echelon_rows(gens, dim);
}

bool subspace_contains(const std::vector<RatVec>& big, const RatVec& v,
                       std::size_t dim) {
  auto base = span_basis(big, dim);
  auto extended = base;
  extended.push_back(v);
  return span_rank(extended, dim) == base.size();
}

bool subspace_contains_all(const std::vector<RatVec>& big,
                           const std::vector<RatVec>& small, std::size_t dim) {
  auto base = span_basis(big, dim);
  auto extended = base;
  extended.insert(extended.end(), small.begin(), small.end());
  return span_rank(extended, dim) == base.size();
}

bool subspace_equal(const std::vector<RatVec>& a, const std::vector<RatVec>& b,
                    std::size_t dim) {
  return subspace_contains_all(a, b, dim) && subspace_contains_all(b, a, dim);
}

std::vector<RatVec> subspace_intersection(const std::vector<RatVec>& a,
                                          const std::vector<RatVec>& b,
                                          std::size_t dim) {
  auto abasis = span_basis(a, dim);
  auto bbasis = span_basis(b, dim);
  if (abasis.empty() || bbasis.empty()) return {};
  // Kernel of [A | -B] as column blocks; the A-part of each kernel vector
  // maps to an intersection element.
  Matrix m(dim, abasis.size() + bbasis.size());
  for (std::size_t j = 0; j < abasis.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = abasis[j][i];
  for (std::size_t j = 0; j < bbasis.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i)
      m.at(i, abasis.size() + j) = -bbasis[j][i];
  std::vector<RatVec> out;
  for (const auto& k : m.kernel_basis()) {
    RatVec v(dim);
    for (std::size_t j = 0; j < abasis.size(); ++j)
      if (!is_zero(k[j]))
        for (std::size_t i = 0; i < dim; ++i) v[i] += k[j] * abasis[j][i];
    if (!rat_vec_is_zero(v)) out.push_back(std::move(v));
  }
  return span_basis(out, dim);
}

std::vector<RatVec> homogeneous_basis(const std::vector<RatVec>& gens,
                                      const SpacePtr& space) {
  const std::size_t dim = space->dim();
  auto base = span_basis(gens, dim);
  std::vector<RatVec> projections;
  for (const auto& v : base) {
    RatVec even(dim), odd(dim);
    for (std::size_t i = 0; i < dim; ++i)
      (space->parity(i) == Parity::even ? even[i] : odd[i]) = v[i];
    if (!rat_vec_is_zero(even)) projections.push_back(even);
    if (!rat_vec_is_zero(odd)) projections.push_back(odd);
  }
  for (const auto& p : projections)
    if (!subspace_contains(base, p, dim))
      throw UsageError("homogeneous_basis: subspace is not graded");
  auto out = span_basis(projections, dim);
  if (out.size() != base.size())
    throw std::logic_error("homogeneous_basis rank drift");
  return out;
}

std::optional<RatVec> coordinates_in(const std::vector<RatVec>& basis,
                                     const RatVec& v, std::size_t dim) {
  Matrix m(dim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = basis[j][i];
  auto sol = solve_linear(m, v);
  if (!sol) return std::nullopt;
  return sol->particular;
}

}  // namespace qf
