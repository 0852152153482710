/* Fixed-domain asymptotics statistics: deterministic prediction-error
 * second-moment tables under the paired measures P0 (truth) and P1 (the
 * equivalent kernel at a different decay), the assumption statistic, the
 * two condition sums, and the Monte Carlo c_n campaign. */
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "vecchia/engine.hpp"
#include "vecchia/gp.hpp"
#include "vecchia/grid.hpp"
#include "vecchia/kernel.hpp"
#include "vecchia/plan.hpp"

namespace vecchia {

// Per-site second moments of prediction errors.  e_{i,0} is the residual
// of predicting y_i from ALL previous sites with weights under theta0;
// e~_{i,1} uses only the plan's conditioning subset with weights under
// theta1.  E_j denotes the second moment under measure j.  theta1 is
// always the equivalent-variance pairing (equivalent_sigma2(theta0, phi1),
// phi1, nu).
struct ErrorVarianceTable {
    KernelParams theta0{1.0, 1.0, 0.5};
    KernelParams theta1{1.0, 1.0, 0.5};
    int k = 0;  // nominal plan k
    std::vector<double> E0_e0;    // E_0 e_{i,0}^2    = sigma0^2 L0_ii^2
    std::vector<double> E1_e1;    // E_1 e_{i,1}^2    = sigma1^2 L1_ii^2
    std::vector<double> E1_te1;   // E_1 e~_{i,1}^2   = sigma1^2 variance_unit
    std::vector<double> E0_te1;   // E_0 e~_{i,1}^2   (cross measure)
    std::vector<double> E1_e0;    // E_1 e_{i,0}^2    (cross measure)
    std::vector<double> E0_diff;  // E_0 (e~_{i,1} - e_{i,0})^2
    std::vector<double> E1_diff;  // E_1 (e~_{i,1} - e_{i,0})^2
};

// Build the table.  with_cross_terms=false fills only E0_e0 / E1_e1 /
// E1_te1 (all a c_n campaign needs) and skips the O(n^3) full-conditioning
// weight solves behind the cross-measure columns.
ErrorVarianceTable error_variance_table(const KernelParams& theta0, double phi1,
                                        const NeighborPlan& plan,
                                        const LocationSet& locs,
                                        bool with_cross_terms = true);

// sum_i (E_1 e_{i,0}^2 - E_1 e_{i,1}^2) / E_1 e_{i,1}^2 over a 1-D grid
// with full conditioning — the orthogonality form of the assumption
// statistic sum_i E_1(e_{i,1} - e_{i,0})^2 / E_1 e_{i,1}^2.
double assumption1_stat(const KernelParams& theta0, double phi1,
                        const LocationSet& locs);

struct Theorem1Sums {
    double cond2_diff_sum;   // sum E_0(e~_{i,1} - e_{i,0})^2 / E_1 e~_{i,1}^2
    double cond2_ratio_sum;  // sum (E_0 e_{i,0}^2 / E_1 e~_{i,1}^2 - 1)^2
    double cond3_diff_sum;   // sum E_1(e~_{i,1} - e_{i,0})^2 / E_0 e_{i,0}^2
    double cond3_ratio_sum;  // sum (E_1 e~_{i,1}^2 / E_0 e_{i,0}^2 - 1)^2
};

Theorem1Sums theorem1_condition_sums(const ErrorVarianceTable& table);

// Realized statistic for one sample drawn under theta0:
//   (1/sqrt(n)) [ sum e~_{i,1}^2 / E_1 e~_{i,1}^2 - sum e_{i,0}^2 / E_0 e_{i,0}^2 ].
double cn_statistic(const std::vector<double>& y, const ErrorVarianceTable& table,
                    const NeighborPlan& plan, const LocationSet& locs);

// Deterministic per-cell machinery shared by all replicates of one (n, nu)
// campaign cell.
struct CnCell {
    LocationSet locs;
    NeighborPlan plan;
    KernelParams theta0;
    KernelParams theta1;
    Eigen::MatrixXd l0;  // Cholesky factor of corr(phi0)
    VecchiaFactor factor1;
    std::vector<double> E0_e0;
    std::vector<double> E1_te1;
};

CnCell make_cn_cell(const KernelParams& theta0, double phi1,
                    const NeighborPlan& plan, const LocationSet& locs);

// Simulate one replicate (seeded stream) and return its c_n value.
double cn_replicate(const CnCell& cell, std::uint64_t seed);

struct CnStudyConfig {
    int dim = 1;
    std::vector<int> n_list;  // total sizes; for dim 2 these must be squares
    std::vector<double> nu_list;
    double calib_distance = 0.2;
    double calib_level = 0.05;
    KRule k_rule = KRule::logn;
    double k_param = 1.5;
    double phi1_factor = 1.2;
    int replicates = 100;
    std::uint64_t seed = 0;
    double sigma2 = 1.0;
};

struct CnCellResult {
    int dim;
    int n;
    double nu;
    int k;
    double mean_cn;
    double sd_cn;
    int replicates;
    std::uint64_t seed;  // campaign seed (replicate streams derive from it)
    std::vector<double> values;
};

// Run every (n, nu) cell; replicates run in parallel on derived streams,
// so results are identical for any thread count.
std::vector<CnCellResult> cn_campaign(const CnStudyConfig& config);

}  // namespace vecchia
