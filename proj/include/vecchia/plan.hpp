/* Ordered conditioning plans: nearest previous-in-order neighbor sets and
 * the neighbor-count schedules. */
#pragma once

#include <string>
#include <vector>

#include "vecchia/grid.hpp"

namespace vecchia {

// Rules for choosing the neighbor count k from the sample size n.
enum class KRule {
    fixed,  // k = round(param)
    power,  // k = floor(n^param)
    logn,   // k = round(param * ln n)
    full,   // k = n - 1 (exact factorization)
};

// Parse "fixed" | "power" | "logn" | "full"; anything else throws
// argument_error.
KRule parse_k_rule(const std::string& name);
const char* k_rule_name(KRule rule);

// Apply a schedule; result is floored at 1.  Throws argument_error for
// n < 2 or a nonpositive parameter where one is required.
int k_schedule(int n, KRule rule, double param);

// Per-site conditioning sets.  sets[i] holds indices < i, sorted
// ascending; |sets[i]| = min(i, k).  Site 0 conditions on nothing.
struct NeighborPlan {
    std::vector<std::vector<int>> sets;
    int k;  // nominal neighbor count the plan was built with
};

// k nearest previous-in-order sites in Euclidean distance, ties broken by
// the smaller ordering index.
NeighborPlan nearest_neighbors(const LocationSet& locs, int k);

// The exact plan: every site conditions on all previous sites.
NeighborPlan full_conditioning(const LocationSet& locs);

// True when sets[i] = {0, ..., i-1} for every site.
bool is_full_plan(const NeighborPlan& plan);

}  // namespace vecchia
