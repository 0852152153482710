/* Gaussian-process core: covariance matrices on location sets, seeded
 * simulation, and exact conditional (kriging) moments — including second
 * moments of prediction errors evaluated under a mismatched kernel. */
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "vecchia/grid.hpp"
#include "vecchia/kernel.hpp"

namespace vecchia {

// Correlation matrix R[i][j] = matern_corr(phi, nu, ||s_i - s_j||).
// Repeated distances (every grid) are evaluated once and memoized.
Eigen::MatrixXd corr_matrix(double phi, double nu, const LocationSet& locs);

// Covariance matrix sigma2 * corr_matrix.
Eigen::MatrixXd cov_matrix(const KernelParams& params, const LocationSet& locs);

// Lower Cholesky factor; throws numerical_error naming the first
// non-positive leading minor on failure.  No jitter is ever added.
Eigen::MatrixXd chol_lower(const Eigen::MatrixXd& m);

struct GPSample {
    std::vector<double> values;  // aligned with the LocationSet order
    std::uint64_t seed;
};

// Y = L Z with Z i.i.d. standard normal from the seeded stream;
// deterministic given (seed, locs, params).
GPSample simulate(const KernelParams& params, const LocationSet& locs,
                  std::uint64_t seed);

struct ConditionalMoments {
    std::vector<double> weights;  // kriging weights, aligned with cond order
    double variance_unit;         // conditional variance with sigma^2 = 1
};

// Conditional weights and unit variance from an explicit correlation
// system: w = r22^{-1} r21, variance_unit = 1 - r21^T w.  One numerical
// policy for every conditional solve: numerical_error when r22 is not
// positive definite or has reciprocal condition below 1e-14 (no silent
// jitter), or when the variance comes out nonpositive.
ConditionalMoments conditional_from_corr(const Eigen::MatrixXd& r22,
                                         const Eigen::VectorXd& r21);

// Kriging weights and unit conditional variance of site `target` given
// `cond` (indices into locs, any order, excluding target), computed in
// correlation scale via conditional_from_corr.  Throws argument_error for
// empty cond.
ConditionalMoments kriging_moments(const KernelParams& weights_kernel, int target,
                                   const std::vector<int>& cond,
                                   const LocationSet& locs);

// E_eval (y_target - w^T y_cond)^2 where w are the kriging weights under
// weights_kernel and the second moment is taken under eval_kernel:
//   K_e(0) - 2 w^T k_e + w^T K_e w   (covariance scale).
// Empty cond returns eval_kernel.sigma2.
double cross_error_variance(const KernelParams& weights_kernel,
                            const KernelParams& eval_kernel, int target,
                            const std::vector<int>& cond, const LocationSet& locs);

}  // namespace vecchia
