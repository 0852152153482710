/* Compares the thread-pool kernels against their serial reference twins:
 * same inputs, wall time for each, speedup, and the max absolute
 * difference of the results (which must be exactly zero — the parallel
 * versions are bitwise-deterministic reorderings of the same arithmetic).
 */
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "vecchia/asymptotics.hpp"
#include "vecchia/engine.hpp"
#include "vecchia/grid.hpp"
#include "vecchia/kernel.hpp"
#include "vecchia/parallel.hpp"
#include "vecchia/plan.hpp"
#include "vecchia/reference.hpp"
#include "vecchia/rng.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& f, int reps) {
    // One untimed warm-up run, then the best of `reps` timed runs.
    f();
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        f();
        const auto t1 = Clock::now();
        best = std::min(
            best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms,
            double max_diff) {
    std::printf("%-28s %10.2f %12.2f %8.2fx   %s\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms,
                max_diff == 0.0 ? "exact" : "DIFFERS");
}

}  // namespace

int main() {
    using namespace vecchia;
    std::printf("threads: %d\n\n", max_threads());
    std::printf("%-28s %10s %12s %9s   %s\n", "kernel", "serial ms",
                "parallel ms", "speedup", "result");

    {  // Vecchia factor assembly on a 2-D grid
        const LocationSet locs = LocationSet::grid_2d(40);  // n = 1600
        const NeighborPlan plan = nearest_neighbors(locs, 10);
        VecchiaFactor a, b;
        const double s =
            time_ms([&] { a = build_factor_serial(9.5, 1.5, plan, locs); }, 3);
        const double p =
            time_ms([&] { b = build_factor(9.5, 1.5, plan, locs); }, 3);
        double diff = 0.0;
        for (std::size_t i = 0; i < a.variance_unit.size(); ++i)
            diff = std::max(diff,
                            std::abs(a.variance_unit[i] - b.variance_unit[i]));
        for (std::size_t i = 0; i < a.weights.size(); ++i)
            for (std::size_t j = 0; j < a.weights[i].size(); ++j)
                diff = std::max(diff,
                                std::abs(a.weights[i][j] - b.weights[i][j]));
        report("build_factor n=1600 k=10", s, p, diff);
    }

    {  // nearest-neighbor plan construction
        const LocationSet locs = LocationSet::grid_2d(64);  // n = 4096
        NeighborPlan a, b;
        const double s =
            time_ms([&] { a = nearest_neighbors_serial(locs, 16); }, 3);
        const double p = time_ms([&] { b = nearest_neighbors(locs, 16); }, 3);
        double diff = 0.0;
        for (std::size_t i = 0; i < a.sets.size(); ++i)
            if (a.sets[i] != b.sets[i]) diff = 1.0;
        report("neighbors n=4096 k=16", s, p, diff);
    }

    {  // c_n replicate batch
        const double phi0 = calibrate_phi(1.0, 0.2, 0.05);
        const LocationSet locs = LocationSet::grid_1d(1024);
        const NeighborPlan plan = nearest_neighbors(locs, 10);
        const CnCell cell =
            make_cn_cell(KernelParams(1.0, phi0, 1.0), 1.2 * phi0, plan, locs);
        std::vector<std::uint64_t> seeds;
        for (int r = 0; r < 64; ++r)
            seeds.push_back(derive_seed(77, static_cast<std::uint64_t>(r)));
        std::vector<double> a, b(seeds.size());
        const double s = time_ms([&] { a = cn_replicates_serial(cell, seeds); }, 3);
        const double p = time_ms(
            [&] {
                parallel_for(seeds.size(), [&](std::size_t r) {
                    b[r] = cn_replicate(cell, seeds[r]);
                });
            },
            3);
        double diff = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            diff = std::max(diff, std::abs(a[i] - b[i]));
        report("cn replicates n=1024 x64", s, p, diff);
    }

    return 0;
}
