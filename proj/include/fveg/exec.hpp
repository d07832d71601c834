#pragma once

#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fveg {

// All stage loops run through these helpers. The serial path is the reference
// implementation; the OpenMP path must produce bitwise identical results
// (disjoint writes per iteration, reductions restricted to min/max which are
// order-independent in IEEE arithmetic).

template <class F>
inline void parallel_for(int n, bool parallel, F&& body) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
#endif
  (void)parallel;
  for (int i = 0; i < n; ++i) body(i);
}

template <class F>
inline double parallel_max(int n, bool parallel, double init, F&& value) {
  double acc = init;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(static) reduction(max : acc)
    for (int i = 0; i < n; ++i) {
      const double v = value(i);
      if (v > acc) acc = v;
    }
    return acc;
  }
#endif
  for (int i = 0; i < n; ++i) {
    const double v = value(i);
    if (v > acc) acc = v;
  }
  return acc;
}

template <class F>
inline double parallel_min(int n, bool parallel, double init, F&& value) {
  double acc = init;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(static) reduction(min : acc)
    for (int i = 0; i < n; ++i) {
      const double v = value(i);
      if (v < acc) acc = v;
    }
    return acc;
  }
#endif
  for (int i = 0; i < n; ++i) {
    const double v = value(i);
    if (v < acc) acc = v;
  }
  return acc;
}

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

}  // namespace fveg
