#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace snmm {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Parallel loop over [0, n). The body must only write to slots indexed by its
// own i (per-unit outputs, per-unit RNG streams); reductions are then done
// serially by the caller so results are bit-identical for any worker count.
template <class F>
void parallel_for(std::ptrdiff_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
#else
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
#endif
}

template <class F>
void serial_for(std::ptrdiff_t n, F&& body) {
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

}  // namespace snmm
