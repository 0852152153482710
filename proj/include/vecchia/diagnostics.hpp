/* Residual diagnostics: standardized one-step residuals, autocorrelation,
 * and the conditioning-adequacy report over a family of plans. */
#pragma once

#include <vector>

#include "vecchia/grid.hpp"
#include "vecchia/kernel.hpp"
#include "vecchia/plan.hpp"

namespace vecchia {

// Standardized sequential residuals z_i = e~_i / sqrt(sigma^2 vu_i) under
// the given parameters and plan.  With full conditioning they reduce to
// the whitened sample L^{-1} y / sigma (computed by that faster path).
std::vector<double> normalized_residuals(const KernelParams& params,
                                         const NeighborPlan& plan,
                                         const LocationSet& locs,
                                         const std::vector<double>& y);

// Sample autocorrelation with the biased normalization
//   r_l = sum_{t<n-l} (x_t - xbar)(x_{t+l} - xbar) / sum_t (x_t - xbar)^2,
// returned for lags 0..max_lag (r_0 = 1).  Requires 1 <= max_lag < n and a
// non-constant series.
std::vector<double> acf(const std::vector<double>& series, int max_lag);

struct AdequacyOptions {
    int max_lag = 30;
    double band_multiplier = 1.96;  // band is +/- band_multiplier / sqrt(n)
    // Fit phi per plan by profile likelihood over
    // [bracket_lo_factor, bracket_hi_factor] * ref phi; when false,
    // residuals are standardized at the reference parameters as given.
    bool fit = true;
    double bracket_lo_factor = 0.1;
    double bracket_hi_factor = 10.0;
};

struct AdequacyRow {
    int k = 0;
    std::vector<double> acf;  // lags 0..max_lag of the residual series
    double inside_frac = 0.0;  // fraction of lags 1..max_lag inside the band
    double max_abs_acf = 0.0;  // max |r_l| over lags 1..max_lag
    double phi_hat = 0.0;
    double sigma2_hat = 0.0;
    bool boundary_warning = false;
};

// One row per plan, in the order given.
std::vector<AdequacyRow> adequacy_report(const KernelParams& ref,
                                         const std::vector<NeighborPlan>& plans,
                                         const LocationSet& locs,
                                         const std::vector<double>& y,
                                         const AdequacyOptions& options = {});

}  // namespace vecchia
