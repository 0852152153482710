/* Serial reference implementations of the parallel kernels.  These are the
 * plain textbook loops — no distance interning, no thread pool — kept as
 * ground truth for equality tests and as the baseline for the benchmark
 * tool.  Results must match the parallel versions bit for bit. */
#pragma once

#include <cstdint>
#include <vector>

#include "vecchia/asymptotics.hpp"
#include "vecchia/engine.hpp"
#include "vecchia/grid.hpp"
#include "vecchia/plan.hpp"

namespace vecchia {

// Per-site conditional solves via kriging_moments, one site at a time.
VecchiaFactor build_factor_serial(double phi, double nu,
                                  const NeighborPlan& plan,
                                  const LocationSet& locs);

// Previous-site scan with a full sort per site.
NeighborPlan nearest_neighbors_serial(const LocationSet& locs, int k);

// Sequential replicate batch over the given streams.
std::vector<double> cn_replicates_serial(const CnCell& cell,
                                         const std::vector<std::uint64_t>& seeds);

}  // namespace vecchia
