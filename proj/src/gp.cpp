/* GP core: covariance assembly, simulation, conditional moments. */
#include "vecchia/gp.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "vecchia/common.hpp"
#include "vecchia/rng.hpp"

namespace vecchia {

Eigen::MatrixXd corr_matrix(double phi, double nu, const LocationSet& locs) {
    const int n = locs.size();
    Eigen::MatrixXd r(n, n);
    std::unordered_map<double, double> memo;  // distance -> correlation
    memo.reserve(256);
    for (int i = 0; i < n; ++i) {
        r(i, i) = 1.0;
        for (int j = 0; j < i; ++j) {
            const double h = locs.distance(i, j);
            auto it = memo.find(h);
            double c;
            if (it != memo.end()) {
                c = it->second;
            } else {
                c = matern_corr(phi, nu, h);
                memo.emplace(h, c);
            }
            r(i, j) = c;
            r(j, i) = c;
        }
    }
    return r;
}

Eigen::MatrixXd cov_matrix(const KernelParams& params, const LocationSet& locs) {
    return params.sigma2 * corr_matrix(params.phi, params.nu, locs);
}

Eigen::MatrixXd chol_lower(const Eigen::MatrixXd& m) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) {
        // locate the first non-positive pivot for the diagnostic
        const int n = static_cast<int>(m.rows());
        Eigen::MatrixXd a = m;
        for (int j = 0; j < n; ++j) {
            if (a(j, j) <= 0.0)
                throw numerical_error("cholesky failed at leading minor " +
                                      std::to_string(j + 1));
            const double d = std::sqrt(a(j, j));
            a.col(j).tail(n - j) /= d;
            for (int k = j + 1; k < n; ++k)
                a.col(k).tail(n - k) -= a(k, j) * a.col(j).tail(n - k);
        }
        throw numerical_error("cholesky failed (indefinite matrix)");
    }
    return llt.matrixL();
}

GPSample simulate(const KernelParams& params, const LocationSet& locs,
                  std::uint64_t seed) {
    const Eigen::MatrixXd l = chol_lower(cov_matrix(params, locs));
    const int n = locs.size();
    Rng rng(seed);
    Eigen::VectorXd z(n);
    for (int i = 0; i < n; ++i) z(i) = rng.normal();
    const Eigen::VectorXd y = l * z;
    GPSample out;
    out.values.assign(y.data(), y.data() + n);
    out.seed = seed;
    return out;
}

namespace {

// Correlation submatrix system for kriging_moments / cross_error_variance.
struct CondSystem {
    Eigen::MatrixXd r22;  // cond x cond correlations
    Eigen::VectorXd r21;  // cond-to-target correlations
};

CondSystem cond_system(double phi, double nu, int target,
                       const std::vector<int>& cond, const LocationSet& locs) {
    const int k = static_cast<int>(cond.size());
    CondSystem s;
    s.r22.resize(k, k);
    s.r21.resize(k);
    for (int a = 0; a < k; ++a) {
        s.r21(a) = matern_corr(phi, nu, locs.distance(target, cond[a]));
        s.r22(a, a) = 1.0;
        for (int b = 0; b < a; ++b) {
            const double c = matern_corr(phi, nu, locs.distance(cond[a], cond[b]));
            s.r22(a, b) = c;
            s.r22(b, a) = c;
        }
    }
    return s;
}

void check_cond_indices(int target, const std::vector<int>& cond,
                        const LocationSet& locs) {
    for (int idx : cond) {
        if (idx < 0 || idx >= locs.size())
            throw argument_error("conditioning index out of range");
        if (idx == target)
            throw argument_error("conditioning set must exclude the target");
    }
    if (target < 0 || target >= locs.size())
        throw argument_error("target index out of range");
}

}  // namespace

ConditionalMoments conditional_from_corr(const Eigen::MatrixXd& r22,
                                         const Eigen::VectorXd& r21) {
    Eigen::LLT<Eigen::MatrixXd> llt(r22);
    if (llt.info() != Eigen::Success)
        throw numerical_error("conditional solve: conditioning correlations not "
                              "positive definite");
    if (llt.rcond() < 1e-14)
        throw numerical_error("conditional solve: conditioning set "
                              "ill-conditioned (rcond < 1e-14)");
    const Eigen::VectorXd w = llt.solve(r21);
    const double variance_unit = 1.0 - r21.dot(w);
    if (!(variance_unit > 0.0))
        throw numerical_error("conditional solve: nonpositive conditional variance");
    ConditionalMoments out;
    out.weights.assign(w.data(), w.data() + w.size());
    out.variance_unit = variance_unit;
    return out;
}

ConditionalMoments kriging_moments(const KernelParams& weights_kernel, int target,
                                   const std::vector<int>& cond,
                                   const LocationSet& locs) {
    if (cond.empty())
        throw argument_error("kriging_moments: empty conditioning set "
                             "(site 1 is handled by the caller convention)");
    check_cond_indices(target, cond, locs);
    const CondSystem s =
        cond_system(weights_kernel.phi, weights_kernel.nu, target, cond, locs);
    return conditional_from_corr(s.r22, s.r21);
}

double cross_error_variance(const KernelParams& weights_kernel,
                            const KernelParams& eval_kernel, int target,
                            const std::vector<int>& cond, const LocationSet& locs) {
    if (cond.empty()) return eval_kernel.sigma2;
    const ConditionalMoments cm = kriging_moments(weights_kernel, target, cond, locs);
    const CondSystem e =
        cond_system(eval_kernel.phi, eval_kernel.nu, target, cond, locs);
    const Eigen::Map<const Eigen::VectorXd> w(cm.weights.data(),
                                              static_cast<int>(cm.weights.size()));
    const double q = 1.0 - 2.0 * e.r21.dot(w) + w.dot(e.r22 * w);
    return eval_kernel.sigma2 * q;
}

}  // namespace vecchia
