#ifndef CARLITZ_PARALLEL_HPP
#define CARLITZ_PARALLEL_HPP

#ifdef _OPENMP
#include <omp.h>
#endif

namespace carlitz {

// OpenMP shims.  Every parallel kernel in this library assigns disjoint
// output slots per index, so results are identical for any thread count.

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

// Serial work below this many estimated coefficient operations.
constexpr long long kParallelCutoff = 1 << 14;

}  // namespace carlitz

#endif
