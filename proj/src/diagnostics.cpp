#include "vecchia/diagnostics.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "vecchia/common.hpp"
#include "vecchia/engine.hpp"
#include "vecchia/gp.hpp"

namespace vecchia {

std::vector<double> normalized_residuals(const KernelParams& params,
                                         const NeighborPlan& plan,
                                         const LocationSet& locs,
                                         const std::vector<double>& y) {
    const int n = static_cast<int>(locs.size());
    if (static_cast<int>(y.size()) != n)
        throw argument_error("normalized_residuals: sample size does not match locations");
    if (static_cast<int>(plan.sets.size()) != n)
        throw argument_error("normalized_residuals: plan size does not match locations");

    const double sigma = std::sqrt(params.sigma2);
    std::vector<double> z(n);
    if (is_full_plan(plan)) {
        const Eigen::MatrixXd l =
            chol_lower(corr_matrix(params.phi, params.nu, locs));
        Eigen::VectorXd u = Eigen::Map<const Eigen::VectorXd>(y.data(), n);
        l.triangularView<Eigen::Lower>().solveInPlace(u);
        for (int i = 0; i < n; ++i) z[i] = u[i] / sigma;
        return z;
    }
    const VecchiaFactor factor = build_factor(params.phi, params.nu, plan, locs);
    const std::vector<double> resid = factor_residuals(factor, plan, y);
    for (int i = 0; i < n; ++i)
        z[i] = resid[i] / (sigma * std::sqrt(factor.variance_unit[i]));
    return z;
}

std::vector<double> acf(const std::vector<double>& series, int max_lag) {
    const int n = static_cast<int>(series.size());
    if (n < 2) throw argument_error("acf: series needs at least 2 points");
    if (max_lag < 1 || max_lag >= n)
        throw argument_error("acf: max_lag must satisfy 1 <= max_lag < n");
    double mean = 0.0;
    for (double x : series) mean += x;
    mean /= n;
    double denom = 0.0;
    for (double x : series) denom += (x - mean) * (x - mean);
    if (!(denom > 0.0))
        throw argument_error("acf: series is constant (zero variance)");
    std::vector<double> r(max_lag + 1);
    r[0] = 1.0;
    for (int l = 1; l <= max_lag; ++l) {
        double s = 0.0;
        for (int t = 0; t + l < n; ++t)
            s += (series[t] - mean) * (series[t + l] - mean);
        r[l] = s / denom;
    }
    return r;
}

std::vector<AdequacyRow> adequacy_report(const KernelParams& ref,
                                         const std::vector<NeighborPlan>& plans,
                                         const LocationSet& locs,
                                         const std::vector<double>& y,
                                         const AdequacyOptions& options) {
    const int n = static_cast<int>(locs.size());
    if (options.max_lag < 1 || options.max_lag >= n)
        throw argument_error("adequacy_report: max_lag must satisfy 1 <= max_lag < n");
    if (options.fit && !(options.bracket_lo_factor > 0.0 &&
                         options.bracket_lo_factor < options.bracket_hi_factor))
        throw argument_error("adequacy_report: invalid fit bracket factors");

    const double band = options.band_multiplier / std::sqrt(double(n));
    std::vector<AdequacyRow> rows(plans.size());
    for (std::size_t p = 0; p < plans.size(); ++p) {
        const NeighborPlan& plan = plans[p];
        AdequacyRow row;
        row.k = plan.k;
        double phi = ref.phi;
        double sigma2 = ref.sigma2;
        if (options.fit) {
            const FitResult fit =
                fit_phi(ref.nu, plan, locs, y, ref.phi * options.bracket_lo_factor,
                        ref.phi * options.bracket_hi_factor);
            phi = fit.phi_hat;
            sigma2 = fit.sigma2_hat;
            row.boundary_warning = fit.boundary_warning;
        }
        row.phi_hat = phi;
        row.sigma2_hat = sigma2;
        const std::vector<double> z = normalized_residuals(
            KernelParams(sigma2, phi, ref.nu), plan, locs, y);
        row.acf = acf(z, options.max_lag);
        int inside = 0;
        double max_abs = 0.0;
        for (int l = 1; l <= options.max_lag; ++l) {
            const double a = std::abs(row.acf[l]);
            if (a <= band) ++inside;
            if (a > max_abs) max_abs = a;
        }
        row.inside_frac = double(inside) / options.max_lag;
        row.max_abs_acf = max_abs;
        rows[p] = std::move(row);
    }
    return rows;
}

}  // namespace vecchia
