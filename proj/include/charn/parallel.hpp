#pragma once

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace charn {

// Every data-parallel kernel in the library accepts an execution mode.
// Parallel runs write into preallocated slots and reduce serially in index
// order, so Serial and Parallel produce bit-identical results; Serial is the
// reference path the tests compare against and the benchmark baseline.
enum class Exec { Serial, Parallel };

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

template <typename Body>
void parallel_for(std::size_t count, Exec exec, Body&& body) {
    if (exec == Exec::Serial || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        body(static_cast<std::size_t>(i));
    }
#else
    for (std::size_t i = 0; i < count; ++i) body(i);
#endif
}

}  // namespace charn
