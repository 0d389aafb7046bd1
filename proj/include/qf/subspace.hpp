#ifndef QF_SUBSPACE_HPP
#define QF_SUBSPACE_HPP

#include <vector>

#include "qf/superspace.hpp"

namespace qf {

/// Subspace helpers on raw coordinate vectors of a fixed ambient dimension.
/// Equality and containment are decided by exact rank tests.

std::size_t span_rank(const std::vector<RatVec>& gens, std::size_t dim);

/// Row-reduced echelon basis of the span; deterministic for golden output.
std::vector<RatVec> span_basis(const std::vector<RatVec>& gens, std::size_t dim);

bool subspace_contains(const std::vector<RatVec>& big, const RatVec& v,
                       std::size_t dim);
bool subspace_contains_all(const std::vector<RatVec>& big,
                           const std::vector<RatVec>& small, std::size_t dim);
bool subspace_equal(const std::vector<RatVec>& a, const std::vector<RatVec>& b,
                    std::size_t dim);

std::vector<RatVec> subspace_intersection(const std::vector<RatVec>& a,
                                          const std::vector<RatVec>& b,
                                          std::size_t dim);

/// For a graded subspace, returns a basis of homogeneous vectors: the even
/// and odd projections of an echelon basis, re-reduced. Throws if the span
/// is not graded (projections escaping the subspace).
std::vector<RatVec> homogeneous_basis(const std::vector<RatVec>& gens,
                                      const SpacePtr& space);

/// Coordinates of v in the given independent basis, if v lies in its span.
std::optional<RatVec> coordinates_in(const std::vector<RatVec>& basis,
                                     const RatVec& v, std::size_t dim);

}  // namespace qf

#endif
