/* Vecchia factorization, likelihood evaluation, and the profile fit. */
#include "vecchia/engine.hpp"

#include <cmath>
#include <unordered_map>

#include "vecchia/common.hpp"
#include "vecchia/parallel.hpp"

namespace vecchia {

namespace {
constexpr double kLog2Pi = 1.8378770664093454836;
}

VecchiaFactor build_factor(double phi, double nu, const NeighborPlan& plan,
                           const LocationSet& locs) {
    const int n = locs.size();
    if (static_cast<int>(plan.sets.size()) != n)
        throw argument_error("build_factor: plan does not match the location set");
    for (int i = 0; i < n; ++i) {
        for (int idx : plan.sets[i]) {
            if (idx < 0 || idx >= n)
                throw argument_error("build_factor: conditioning index out of range");
            if (idx == i)
                throw argument_error("build_factor: conditioning set includes target");
        }
    }

    // Correlations depend on the pair only through its distance, and
    // gridded location sets repeat a handful of distances across all
    // conditional systems.  Collect the distinct distances, evaluate the
    // kernel once per distance (in parallel), then assemble every system
    // from the finished read-only table.
    std::unordered_map<double, int> index;
    std::vector<double> dist;
    auto intern = [&](double h) {
        auto [it, fresh] = index.try_emplace(h, static_cast<int>(dist.size()));
        if (fresh) dist.push_back(h);
        return it->second;
    };
    std::vector<std::vector<int>> r21_idx(n);
    std::vector<std::vector<int>> r22_idx(n);  // strict lower triangle, row-major
    for (int i = 0; i < n; ++i) {
        const std::vector<int>& set = plan.sets[i];
        const int k = static_cast<int>(set.size());
        r21_idx[i].resize(k);
        r22_idx[i].resize(static_cast<std::size_t>(k) * (k - 1) / 2);
        std::size_t pos = 0;
        for (int a = 0; a < k; ++a) {
            r21_idx[i][a] = intern(locs.distance(i, set[a]));
            for (int b = 0; b < a; ++b)
                r22_idx[i][pos++] = intern(locs.distance(set[a], set[b]));
        }
    }
    std::vector<double> corr(dist.size());
    parallel_for(static_cast<std::int64_t>(dist.size()), [&](std::int64_t d) {
        corr[d] = matern_corr(phi, nu, dist[d]);
    });

    VecchiaFactor f;
    f.weights.resize(n);
    f.variance_unit.assign(n, 1.0);
    parallel_for(n, [&](std::int64_t i) {
        const std::vector<int>& set = plan.sets[i];
        if (set.empty()) return;  // site 0: variance 1, no weights
        const int k = static_cast<int>(set.size());
        Eigen::MatrixXd r22(k, k);
        Eigen::VectorXd r21(k);
        std::size_t pos = 0;
        for (int a = 0; a < k; ++a) {
            r21(a) = corr[r21_idx[i][a]];
            r22(a, a) = 1.0;
            for (int b = 0; b < a; ++b) {
                const double c = corr[r22_idx[i][pos++]];
                r22(a, b) = c;
                r22(b, a) = c;
            }
        }
        ConditionalMoments cm = conditional_from_corr(r22, r21);
        f.weights[i] = std::move(cm.weights);
        f.variance_unit[i] = cm.variance_unit;
    });
    return f;
}

std::vector<double> factor_residuals(const VecchiaFactor& factor,
                                     const NeighborPlan& plan,
                                     const std::vector<double>& y) {
    const int n = static_cast<int>(y.size());
    if (static_cast<int>(plan.sets.size()) != n ||
        static_cast<int>(factor.weights.size()) != n)
        throw argument_error("factor_residuals: factor/plan/sample size mismatch");
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) {
        double mean = 0.0;
        const std::vector<int>& set = plan.sets[i];
        const std::vector<double>& w = factor.weights[i];
        for (std::size_t a = 0; a < set.size(); ++a) mean += w[a] * y[set[a]];
        r[i] = y[i] - mean;
    }
    return r;
}

void full_residual_stats(double phi, double nu, const LocationSet& locs,
                         const std::vector<double>& y,
                         std::vector<double>* resid,
                         std::vector<double>* variance_unit) {
    const int n = locs.size();
    if (static_cast<int>(y.size()) != n)
        throw argument_error("full_residual_stats: sample size mismatch");
    const Eigen::MatrixXd l = chol_lower(corr_matrix(phi, nu, locs));
    const Eigen::Map<const Eigen::VectorXd> yv(y.data(), n);
    const Eigen::VectorXd u =
        l.triangularView<Eigen::Lower>().solve(yv.eval());
    if (resid) {
        resid->resize(n);
        for (int i = 0; i < n; ++i) (*resid)[i] = l(i, i) * u(i);
    }
    if (variance_unit) {
        variance_unit->resize(n);
        for (int i = 0; i < n; ++i) (*variance_unit)[i] = l(i, i) * l(i, i);
    }
}

double vecchia_loglik(const KernelParams& params, const NeighborPlan& plan,
                      const LocationSet& locs, const std::vector<double>& y) {
    const int n = locs.size();
    if (static_cast<int>(y.size()) != n)
        throw argument_error("vecchia_loglik: sample size mismatch");
    const VecchiaFactor f = build_factor(params.phi, params.nu, plan, locs);
    const std::vector<double> r = factor_residuals(f, plan, y);
    double log_unit = 0.0, quad = 0.0;
    for (int i = 0; i < n; ++i) {
        log_unit += std::log(f.variance_unit[i]);
        quad += r[i] * r[i] / f.variance_unit[i];
    }
    return -0.5 * (n * kLog2Pi + n * std::log(params.sigma2) + log_unit +
                   quad / params.sigma2);
}

namespace {

// shared core: sigma2_hat and sum log variance_unit at a given phi
struct ProfileParts {
    double sigma2_hat;
    double sum_log_unit;
};

ProfileParts profile_parts(double phi, double nu, const NeighborPlan& plan,
                           const LocationSet& locs, const std::vector<double>& y) {
    const int n = locs.size();
    if (static_cast<int>(y.size()) != n)
        throw argument_error("sigma2_hat_vecch: sample size mismatch");
    const VecchiaFactor f = build_factor(phi, nu, plan, locs);
    const std::vector<double> r = factor_residuals(f, plan, y);
    double acc = 0.0, log_unit = 0.0;
    for (int i = 0; i < n; ++i) {
        acc += r[i] * r[i] / f.variance_unit[i];
        log_unit += std::log(f.variance_unit[i]);
    }
    return {acc / n, log_unit};
}

}  // namespace

double sigma2_hat_vecch(double phi1, double nu, const NeighborPlan& plan,
                        const LocationSet& locs, const std::vector<double>& y) {
    return profile_parts(phi1, nu, plan, locs, y).sigma2_hat;
}

double profile_loglik(double phi, double nu, const NeighborPlan& plan,
                      const LocationSet& locs, const std::vector<double>& y) {
    const ProfileParts p = profile_parts(phi, nu, plan, locs, y);
    const double n = static_cast<double>(locs.size());
    if (!(p.sigma2_hat > 0.0))
        throw numerical_error("profile_loglik: degenerate sample (sigma2_hat = 0)");
    return -0.5 * p.sum_log_unit - 0.5 * n - 0.5 * n * std::log(p.sigma2_hat);
}

FitResult fit_phi(double nu, const NeighborPlan& plan, const LocationSet& locs,
                  const std::vector<double>& y, double phi_lo, double phi_hi) {
    if (!(phi_lo > 0.0) || !(phi_hi > phi_lo))
        throw argument_error("fit_phi: need 0 < phi_lo < phi_hi");
    auto objective = [&](double t) {
        return profile_loglik(std::exp(t), nu, plan, locs, y);
    };
    // golden-section on log phi; interval width 1e-6 == relative tol in phi
    const double gr = 0.6180339887498949;
    double a = std::log(phi_lo), b = std::log(phi_hi);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = objective(c), fd = objective(d);
    while (b - a > 1e-6) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = objective(d);
        }
    }
    FitResult out;
    out.phi_hat = std::exp(0.5 * (a + b));
    out.sigma2_hat = sigma2_hat_vecch(out.phi_hat, nu, plan, locs, y);
    out.boundary_warning = out.phi_hat <= phi_lo * 1.01 || out.phi_hat >= phi_hi / 1.01;
    return out;
}

}  // namespace vecchia
