/* OpenMP worker-pool helper.
 *
 * All parallel loops in this library write to disjoint per-index slots and
 * reduce sequentially afterwards, so results are byte-identical for any
 * thread count.  Exceptions thrown inside a worker are captured and
 * rethrown on the calling thread after the loop joins.
 */
#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vecchia {

/* Global worker-pool size; 0 means "hardware default".  Set once from the
 * CLI --threads flag before launching work. */
int max_threads();
void set_max_threads(int n);

template <class F>
void parallel_for(std::int64_t count, F&& body) {
    std::exception_ptr error = nullptr;
    std::mutex error_mutex;
#ifdef _OPENMP
    const int nthreads = max_threads();
#pragma omp parallel for schedule(static) num_threads(nthreads > 0 ? nthreads : omp_get_max_threads())
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
#else
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
            if (!error) error = std::current_exception();
        }
    }
#endif
    if (error) std::rethrow_exception(error);
}

}  // namespace vecchia
