#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qref {

// Thin wrappers so per-thread accumulator code compiles with or without
// OpenMP. Exact arithmetic is associative and commutative, so splitting a
// sum across threads and combining the slots gives bit-identical results
// for any thread count.

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline int thread_num() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

inline double wall_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return 0.0;
#endif
}

}  // namespace qref
