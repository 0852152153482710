#include "vecchia/reference.hpp"

#include <algorithm>
#include <utility>

#include "vecchia/common.hpp"
#include "vecchia/gp.hpp"
#include "vecchia/kernel.hpp"

namespace vecchia {

VecchiaFactor build_factor_serial(double phi, double nu,
                                  const NeighborPlan& plan,
                                  const LocationSet& locs) {
    const int n = locs.size();
    if (static_cast<int>(plan.sets.size()) != n)
        throw argument_error("build_factor_serial: plan does not match the location set");
    VecchiaFactor f;
    f.weights.resize(n);
    f.variance_unit.assign(n, 1.0);
    const KernelParams corr_params(1.0, phi, nu);
    for (int i = 0; i < n; ++i) {
        const std::vector<int>& set = plan.sets[i];
        if (set.empty()) continue;
        ConditionalMoments cm = kriging_moments(corr_params, i, set, locs);
        f.weights[i] = std::move(cm.weights);
        f.variance_unit[i] = cm.variance_unit;
    }
    return f;
}

NeighborPlan nearest_neighbors_serial(const LocationSet& locs, int k) {
    if (k < 1) throw argument_error("nearest_neighbors_serial: need k >= 1");
    const int n = locs.size();
    NeighborPlan plan;
    plan.k = k;
    plan.sets.resize(n);
    for (int i = 0; i < n; ++i) {
        const int take = std::min(i, k);
        if (take == 0) continue;
        std::vector<std::pair<double, int>> cand;
        cand.reserve(i);
        for (int j = 0; j < i; ++j) cand.emplace_back(locs.distance(i, j), j);
        std::sort(cand.begin(), cand.end());
        std::vector<int>& set = plan.sets[i];
        set.resize(take);
        for (int a = 0; a < take; ++a) set[a] = cand[a].second;
        std::sort(set.begin(), set.end());
    }
    return plan;
}

std::vector<double> cn_replicates_serial(const CnCell& cell,
                                         const std::vector<std::uint64_t>& seeds) {
    std::vector<double> values(seeds.size());
    for (std::size_t r = 0; r < seeds.size(); ++r)
        values[r] = cn_replicate(cell, seeds[r]);
    return values;
}

}  // namespace vecchia
