#include "spdc/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spdc {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() { return g_max_threads.load(); }

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace detail {

int resolved_threads() {
    int cap = g_max_threads.load();
#ifdef _OPENMP
    int hw = omp_get_max_threads();
    if (cap == 0) return hw;
    return cap < hw ? cap : hw;
#else
    (void)cap;
    return 1;
#endif
}

} // namespace detail

} // namespace spdc
