#include "vecchia/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "vecchia/common.hpp"
#include "vecchia/parallel.hpp"
#include "vecchia/rng.hpp"

namespace vecchia {

namespace {

// Full-conditioning prediction weights for site i from the leading block of
// a lower Cholesky factor of the correlation matrix the weights live under:
// solve R[0:i,0:i] w = R[0:i,i] using R = L L^T.
Eigen::VectorXd full_weights(const Eigen::MatrixXd& l, const Eigen::MatrixXd& r,
                             int i) {
    Eigen::VectorXd w = r.col(i).head(i);
    l.topLeftCorner(i, i).triangularView<Eigen::Lower>().solveInPlace(w);
    l.topLeftCorner(i, i).triangularView<Eigen::Lower>().transpose().solveInPlace(w);
    return w;
}

// ||L[0:i+1,0:i+1]^T d||^2 = d^T R[0:i+1,0:i+1] d for the correlation R
// factored by L: the unit-variance quadratic form of the error combination d.
double quad_form(const Eigen::MatrixXd& l, const Eigen::VectorXd& d) {
    const int m = static_cast<int>(d.size());
    Eigen::VectorXd v =
        l.topLeftCorner(m, m).triangularView<Eigen::Lower>().transpose() * d;
    return v.squaredNorm();
}

// Error combination of the subset-conditioned residual: -weights on the
// conditioning set, +1 at the site, embedded into coordinates {0, ..., i}.
Eigen::VectorXd embed_subset(const std::vector<int>& set,
                             const std::vector<double>& weights, int i) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(i + 1);
    for (std::size_t j = 0; j < set.size(); ++j) d[set[j]] = -weights[j];
    d[i] = 1.0;
    return d;
}

}  // namespace

ErrorVarianceTable error_variance_table(const KernelParams& theta0, double phi1,
                                        const NeighborPlan& plan,
                                        const LocationSet& locs,
                                        bool with_cross_terms) {
    const int n = static_cast<int>(locs.size());
    if (static_cast<int>(plan.sets.size()) != n)
        throw argument_error("error_variance_table: plan size does not match locations");
    const double s0 = theta0.sigma2;
    const double s1 = equivalent_sigma2(theta0, phi1);
    const KernelParams theta1(s1, phi1, theta0.nu);

    ErrorVarianceTable table;
    table.theta0 = theta0;
    table.theta1 = theta1;
    table.k = plan.k;

    const Eigen::MatrixXd r0 = corr_matrix(theta0.phi, theta0.nu, locs);
    const Eigen::MatrixXd l0 = chol_lower(r0);
    const VecchiaFactor factor1 = build_factor(phi1, theta0.nu, plan, locs);

    table.E0_e0.resize(n);
    table.E1_e1.resize(n);
    table.E1_te1.resize(n);
    for (int i = 0; i < n; ++i) {
        table.E0_e0[i] = s0 * l0(i, i) * l0(i, i);
        table.E1_te1[i] = s1 * factor1.variance_unit[i];
    }
    if (!with_cross_terms) return table;

    const Eigen::MatrixXd l1 = chol_lower(corr_matrix(phi1, theta0.nu, locs));
    for (int i = 0; i < n; ++i) table.E1_e1[i] = s1 * l1(i, i) * l1(i, i);

    table.E0_te1.resize(n);
    table.E1_e0.resize(n);
    table.E0_diff.resize(n);
    table.E1_diff.resize(n);
    table.E0_te1[0] = s0;
    table.E1_e0[0] = s1;
    table.E0_diff[0] = 0.0;
    table.E1_diff[0] = 0.0;
    parallel_for(n - 1, [&](std::int64_t idx) {
        const int i = static_cast<int>(idx) + 1;
        const Eigen::VectorXd dt =
            embed_subset(plan.sets[i], factor1.weights[i], i);
        Eigen::VectorXd d0 = Eigen::VectorXd::Zero(i + 1);
        d0.head(i) = -full_weights(l0, r0, i);
        d0[i] = 1.0;
        table.E0_te1[i] = s0 * quad_form(l0, dt);
        table.E1_e0[i] = s1 * quad_form(l1, d0);
        const Eigen::VectorXd dd = dt - d0;  // y_i terms cancel
        table.E0_diff[i] = s0 * quad_form(l0, dd);
        table.E1_diff[i] = s1 * quad_form(l1, dd);
    });
    return table;
}

double assumption1_stat(const KernelParams& theta0, double phi1,
                        const LocationSet& locs) {
    if (locs.dim() != 1)
        throw argument_error("assumption1_stat: locations must be a 1-D grid");
    const int n = static_cast<int>(locs.size());
    const double s1 = equivalent_sigma2(theta0, phi1);
    const Eigen::MatrixXd r0 = corr_matrix(theta0.phi, theta0.nu, locs);
    const Eigen::MatrixXd l0 = chol_lower(r0);
    const Eigen::MatrixXd l1 = chol_lower(corr_matrix(phi1, theta0.nu, locs));

    std::vector<double> terms(n, 0.0);
    parallel_for(n - 1, [&](std::int64_t idx) {
        const int i = static_cast<int>(idx) + 1;
        Eigen::VectorXd d0 = Eigen::VectorXd::Zero(i + 1);
        d0.head(i) = -full_weights(l0, r0, i);
        d0[i] = 1.0;
        const double e1_e0 = s1 * quad_form(l1, d0);
        const double e1_e1 = s1 * l1(i, i) * l1(i, i);
        terms[i] = (e1_e0 - e1_e1) / e1_e1;
    });
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum;
}

Theorem1Sums theorem1_condition_sums(const ErrorVarianceTable& table) {
    const std::size_t n = table.E0_e0.size();
    if (table.E0_diff.size() != n || table.E1_diff.size() != n ||
        table.E0_te1.size() != n || table.E1_e0.size() != n)
        throw argument_error(
            "theorem1_condition_sums: table lacks cross-measure columns "
            "(built with with_cross_terms=false?)");
    Theorem1Sums sums{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const double ratio20 = table.E0_e0[i] / table.E1_te1[i];
        const double ratio31 = table.E1_te1[i] / table.E0_e0[i];
        sums.cond2_diff_sum += table.E0_diff[i] / table.E1_te1[i];
        sums.cond2_ratio_sum += (ratio20 - 1.0) * (ratio20 - 1.0);
        sums.cond3_diff_sum += table.E1_diff[i] / table.E0_e0[i];
        sums.cond3_ratio_sum += (ratio31 - 1.0) * (ratio31 - 1.0);
    }
    return sums;
}

double cn_statistic(const std::vector<double>& y, const ErrorVarianceTable& table,
                    const NeighborPlan& plan, const LocationSet& locs) {
    const int n = static_cast<int>(locs.size());
    if (static_cast<int>(y.size()) != n)
        throw argument_error("cn_statistic: sample size does not match locations");
    if (table.E0_e0.size() != static_cast<std::size_t>(n) ||
        table.E1_te1.size() != static_cast<std::size_t>(n))
        throw argument_error("cn_statistic: table size does not match locations");

    const VecchiaFactor factor1 =
        build_factor(table.theta1.phi, table.theta1.nu, plan, locs);
    const std::vector<double> te = factor_residuals(factor1, plan, y);

    const Eigen::MatrixXd l0 =
        chol_lower(corr_matrix(table.theta0.phi, table.theta0.nu, locs));
    Eigen::VectorXd u = Eigen::Map<const Eigen::VectorXd>(y.data(), n);
    l0.triangularView<Eigen::Lower>().solveInPlace(u);

    double sum1 = 0.0;
    double sum0 = 0.0;
    for (int i = 0; i < n; ++i) {
        sum1 += te[i] * te[i] / table.E1_te1[i];
        const double e0 = l0(i, i) * u[i];
        sum0 += e0 * e0 / table.E0_e0[i];
    }
    return (sum1 - sum0) / std::sqrt(static_cast<double>(n));
}

CnCell make_cn_cell(const KernelParams& theta0, double phi1,
                    const NeighborPlan& plan, const LocationSet& locs) {
    const int n = static_cast<int>(locs.size());
    if (static_cast<int>(plan.sets.size()) != n)
        throw argument_error("make_cn_cell: plan size does not match locations");
    const double s1 = equivalent_sigma2(theta0, phi1);
    CnCell cell{locs,
                plan,
                theta0,
                KernelParams(s1, phi1, theta0.nu),
                chol_lower(corr_matrix(theta0.phi, theta0.nu, locs)),
                build_factor(phi1, theta0.nu, plan, locs),
                std::vector<double>(n),
                std::vector<double>(n)};
    for (int i = 0; i < n; ++i) {
        cell.E0_e0[i] = theta0.sigma2 * cell.l0(i, i) * cell.l0(i, i);
        cell.E1_te1[i] = s1 * cell.factor1.variance_unit[i];
    }
    return cell;
}

double cn_replicate(const CnCell& cell, std::uint64_t seed) {
    const int n = static_cast<int>(cell.locs.size());
    Rng rng(seed);
    Eigen::VectorXd z(n);
    double sum0 = 0.0;  // sum e_{i,0}^2 / E_0 e_{i,0}^2 collapses to sum z_i^2
    for (int i = 0; i < n; ++i) {
        z[i] = rng.normal();
        sum0 += z[i] * z[i];
    }
    Eigen::VectorXd yv = cell.l0.triangularView<Eigen::Lower>() * z;
    yv *= std::sqrt(cell.theta0.sigma2);
    const std::vector<double> y(yv.data(), yv.data() + n);
    const std::vector<double> te = factor_residuals(cell.factor1, cell.plan, y);
    double sum1 = 0.0;
    for (int i = 0; i < n; ++i) sum1 += te[i] * te[i] / cell.E1_te1[i];
    return (sum1 - sum0) / std::sqrt(static_cast<double>(n));
}

std::vector<CnCellResult> cn_campaign(const CnStudyConfig& config) {
    if (config.dim != 1 && config.dim != 2)
        throw argument_error("cn_campaign: dim must be 1 or 2");
    if (config.n_list.empty() || config.nu_list.empty())
        throw argument_error("cn_campaign: n list and nu list must be nonempty");
    if (config.replicates < 2)
        throw argument_error("cn_campaign: at least 2 replicates required");
    if (!(config.phi1_factor > 0.0))
        throw argument_error("cn_campaign: phi1 factor must be positive");
    if (!(config.sigma2 > 0.0))
        throw argument_error("cn_campaign: sigma2 must be positive");

    std::vector<CnCellResult> results;
    for (int n : config.n_list) {
        LocationSet locs = [&] {
            if (config.dim == 1) return LocationSet::grid_1d(n);
            const int side = static_cast<int>(std::lround(std::sqrt(double(n))));
            if (side * side != n)
                throw argument_error(
                    "cn_campaign: 2-D sizes must be perfect squares, got " +
                    std::to_string(n));
            return LocationSet::grid_2d(side);
        }();
        const int k = k_schedule(n, config.k_rule, config.k_param);
        const NeighborPlan plan = (config.k_rule == KRule::full)
                                      ? full_conditioning(locs)
                                      : nearest_neighbors(locs, k);
        for (double nu : config.nu_list) {
            const double phi0 =
                calibrate_phi(nu, config.calib_distance, config.calib_level);
            const KernelParams theta0(config.sigma2, phi0, nu);
            const CnCell cell =
                make_cn_cell(theta0, config.phi1_factor * phi0, plan, locs);

            CnCellResult res;
            res.dim = config.dim;
            res.n = n;
            res.nu = nu;
            res.k = plan.k;
            res.replicates = config.replicates;
            res.seed = config.seed;
            res.values.resize(config.replicates);
            parallel_for(config.replicates, [&](std::int64_t rep) {
                const std::uint64_t s = derive_seed(
                    config.seed, static_cast<std::uint64_t>(config.dim),
                    static_cast<std::uint64_t>(n), nu,
                    static_cast<std::uint64_t>(rep));
                res.values[rep] = cn_replicate(cell, s);
            });
            double mean = 0.0;
            for (double v : res.values) mean += v;
            mean /= config.replicates;
            double ss = 0.0;
            for (double v : res.values) ss += (v - mean) * (v - mean);
            res.mean_cn = mean;
            res.sd_cn = std::sqrt(ss / (config.replicates - 1));
            results.push_back(std::move(res));
        }
    }
    return results;
}

}  // namespace vecchia
