#pragma once

// Conditional OpenMP helpers. Serial builds report a single thread.

#ifdef _OPENMP
#include <omp.h>
#endif

namespace forestdyn {

inline int num_threads() {
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

}  // namespace forestdyn
