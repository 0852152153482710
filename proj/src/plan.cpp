/* Neighbor-plan construction and k schedules. */
#include "vecchia/plan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vecchia/common.hpp"
#include "vecchia/parallel.hpp"

namespace vecchia {

KRule parse_k_rule(const std::string& name) {
    if (name == "fixed") return KRule::fixed;
    if (name == "power") return KRule::power;
    if (name == "logn") return KRule::logn;
    if (name == "full") return KRule::full;
    throw argument_error("unknown k rule '" + name +
                         "' (expected fixed|power|logn|full)");
}

const char* k_rule_name(KRule rule) {
    switch (rule) {
        case KRule::fixed: return "fixed";
        case KRule::power: return "power";
        case KRule::logn: return "logn";
        case KRule::full: return "full";
    }
    throw argument_error("unknown k rule value");
}

int k_schedule(int n, KRule rule, double param) {
    if (n < 2) throw argument_error("k_schedule: need n >= 2");
    double k = 1.0;
    switch (rule) {
        case KRule::fixed:
            k = std::round(param);
            break;
        case KRule::power:
            if (param <= 0.0) throw argument_error("k_schedule: power exponent must be > 0");
            k = std::floor(std::pow(static_cast<double>(n), param));
            break;
        case KRule::logn:
            if (param <= 0.0) throw argument_error("k_schedule: log factor must be > 0");
            k = std::round(param * std::log(static_cast<double>(n)));
            break;
        case KRule::full:
            k = n - 1;
            break;
    }
    return std::max(1, static_cast<int>(k));
}

NeighborPlan nearest_neighbors(const LocationSet& locs, int k) {
    if (k < 1) throw argument_error("nearest_neighbors: need k >= 1");
    const int n = locs.size();
    NeighborPlan plan;
    plan.k = k;
    plan.sets.resize(n);
    parallel_for(n, [&](std::int64_t i) {
        const int take = std::min<int>(static_cast<int>(i), k);
        if (take == 0) return;
        std::vector<std::pair<double, int>> cand;
        cand.reserve(i);
        for (int j = 0; j < i; ++j)
            cand.emplace_back(locs.distance(static_cast<int>(i), j), j);
        // (distance, index) order makes the tie-break deterministic
        std::partial_sort(cand.begin(), cand.begin() + take, cand.end());
        std::vector<int>& set = plan.sets[i];
        set.resize(take);
        for (int a = 0; a < take; ++a) set[a] = cand[a].second;
        std::sort(set.begin(), set.end());
    });
    return plan;
}

NeighborPlan full_conditioning(const LocationSet& locs) {
    const int n = locs.size();
    NeighborPlan plan;
    plan.k = n - 1;
    plan.sets.resize(n);
    for (int i = 0; i < n; ++i) {
        plan.sets[i].resize(i);
        std::iota(plan.sets[i].begin(), plan.sets[i].end(), 0);
    }
    return plan;
}

bool is_full_plan(const NeighborPlan& plan) {
    for (std::size_t i = 0; i < plan.sets.size(); ++i) {
        if (plan.sets[i].size() != i) return false;
        for (std::size_t a = 0; a < i; ++a) {
            if (plan.sets[i][a] != static_cast<int>(a)) return false;
        }
    }
    return true;
}

}  // namespace vecchia
