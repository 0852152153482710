/* Vecchia factorization engine: per-site kriging factors, the factorized
 * log-likelihood, the closed-form variance estimate at fixed decay, and the
 * profile-likelihood decay fit. */
#pragma once

#include <vector>

#include "vecchia/gp.hpp"
#include "vecchia/grid.hpp"
#include "vecchia/kernel.hpp"
#include "vecchia/plan.hpp"

namespace vecchia {

// Correlation-scale conditioning factors for every site: weights aligned
// with plan.sets[i] and the unit conditional variance (site 0 has no
// weights and variance 1).  log det of the implied correlation matrix is
// sum(log variance_unit).
struct VecchiaFactor {
    std::vector<std::vector<double>> weights;
    std::vector<double> variance_unit;
};

// Build the factor at (phi, nu); parallel across sites.
VecchiaFactor build_factor(double phi, double nu, const NeighborPlan& plan,
                           const LocationSet& locs);

// Conditional residuals e~_i = y_i - w_i^T y_{S_(i)}.
std::vector<double> factor_residuals(const VecchiaFactor& factor,
                                     const NeighborPlan& plan,
                                     const std::vector<double>& y);

// Residuals and unit variances for the full-conditioning plan through one
// global Cholesky of the correlation matrix (identical values to the
// per-site route, O(n^3) total instead of O(n^4)).
void full_residual_stats(double phi, double nu, const LocationSet& locs,
                         const std::vector<double>& y,
                         std::vector<double>* resid,
                         std::vector<double>* variance_unit);

// Sum over sites of log N(y_i; w_i^T y_{S_(i)}, sigma2 * variance_unit_i).
double vecchia_loglik(const KernelParams& params, const NeighborPlan& plan,
                      const LocationSet& locs, const std::vector<double>& y);

// Closed-form variance estimate at fixed decay phi1:
// (1/n) sum e~_{i,1}^2 / variance_unit_i, the argmax over sigma2 of the
// factorized likelihood.
double sigma2_hat_vecch(double phi1, double nu, const NeighborPlan& plan,
                        const LocationSet& locs, const std::vector<double>& y);

// Profile objective in phi (sigma2 maximized out):
//   -(1/2) sum log variance_unit_i(phi) - n/2 - (n/2) log sigma2_hat(phi);
// equals vecchia_loglik at (sigma2_hat(phi), phi) plus (n/2) log 2 pi.
double profile_loglik(double phi, double nu, const NeighborPlan& plan,
                      const LocationSet& locs, const std::vector<double>& y);

struct FitResult {
    double phi_hat;
    double sigma2_hat;
    // set when phi_hat lands within 1% of a bracket endpoint — the
    // maximizer is then suspect and the bracket should be widened
    bool boundary_warning;
};

// Golden-section maximization of profile_loglik over log phi in
// [phi_lo, phi_hi] to 1e-6 relative tolerance in phi.
FitResult fit_phi(double nu, const NeighborPlan& plan, const LocationSet& locs,
                  const std::vector<double>& y, double phi_lo, double phi_hi);

}  // namespace vecchia
