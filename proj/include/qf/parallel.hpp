#ifndef QF_PARALLEL_HPP
#define QF_PARALLEL_HPP

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qf {

// Small problems are not worth forking a team for; GMP work per index is
// tiny below this.
inline constexpr std::size_t kParallelGrain = 512;

/// Runs fn(i) for i in [0, n). Iterations must be independent and write to
/// disjoint slots; results are then identical to the serial order.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
#if defined(_OPENMP)
  if (n >= kParallelGrain) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int parallel_thread_count() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qf

#endif
