/* Thread-count control for the explicit parallel loops. */
#include "vecchia/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <atomic>

#include "vecchia/common.hpp"

namespace vecchia {

namespace {
std::atomic<int> g_max_threads{0};  // 0 = use the OpenMP default
}

int max_threads() {
    const int requested = g_max_threads.load(std::memory_order_relaxed);
    if (requested > 0) return requested;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_max_threads(int n) {
    if (n < 0) throw argument_error("set_max_threads: thread count must be >= 0");
    g_max_threads.store(n, std::memory_order_relaxed);
}

}  // namespace vecchia
