#pragma once

#include <cstddef>

namespace spdc {

// Worker cap for parallel_for. 0 = library default (all available cores).
void set_max_threads(int n);
int max_threads();
bool openmp_enabled();

namespace detail {
int resolved_threads();
}

// Serial reference loop, kept as the comparison baseline for the OpenMP path.
template <class Body>
void serial_for(std::size_t n, Body&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

} // namespace spdc

#ifdef _OPENMP
#include <omp.h>

namespace spdc {

// Data-parallel map: body(i) must write only to slot i of its output, so the
// result is identical for any thread count (reductions stay with the caller).
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
    const int k = detail::resolved_threads();
    if (k <= 1 || n < 2) {
        serial_for(n, body);
        return;
    }
#pragma omp parallel for schedule(static) num_threads(k)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        body(static_cast<std::size_t>(i));
}

} // namespace spdc

#else

namespace spdc {

template <class Body>
void parallel_for(std::size_t n, Body&& body) {
    serial_for(n, body);
}

} // namespace spdc

#endif
