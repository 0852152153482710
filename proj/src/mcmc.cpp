#include "vecchia/mcmc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>

#include "vecchia/common.hpp"
#include "vecchia/engine.hpp"
#include "vecchia/gp.hpp"
#include "vecchia/kernel.hpp"
#include "vecchia/parallel.hpp"
#include "vecchia/rng.hpp"

namespace vecchia {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;

double dense_loglik(double phi, double log_sigma2, double nu,
                    const LocationSet& locs, const std::vector<double>& y) {
    const int n = locs.size();
    const Eigen::MatrixXd l = chol_lower(corr_matrix(phi, nu, locs));
    Eigen::VectorXd u = Eigen::Map<const Eigen::VectorXd>(y.data(), n);
    l.triangularView<Eigen::Lower>().solveInPlace(u);
    double log_det_corr = 0.0;
    for (int i = 0; i < n; ++i) log_det_corr += 2.0 * std::log(l(i, i));
    return -0.5 * (n * kLog2Pi + n * log_sigma2 + log_det_corr +
                   u.squaredNorm() * std::exp(-log_sigma2));
}

}  // namespace

double log_posterior(double phi, double log_sigma2, double nu,
                     const NeighborPlan& plan, const LocationSet& locs,
                     const std::vector<double>& y, const PriorSpec& priors) {
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    if (!(phi > 0.0) || !std::isfinite(phi) || !std::isfinite(log_sigma2))
        return kNegInf;
    const double sigma2 = std::exp(log_sigma2);
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) return kNegInf;

    double loglik;
    try {
        if (is_full_plan(plan)) {
            loglik = dense_loglik(phi, log_sigma2, nu, locs, y);
        } else {
            loglik = vecchia_loglik(KernelParams(sigma2, phi, nu), plan, locs, y);
        }
    } catch (const numerical_error&) {
        static std::atomic<bool> warned{false};
        if (!warned.exchange(true))
            std::fprintf(stderr,
                         "warning: likelihood evaluation failed numerically for "
                         "some proposals; treating them as zero density\n");
        return kNegInf;
    }
    const double s = priors.sigma2_scale;
    const double half_normal = -sigma2 * sigma2 / (2.0 * s * s);
    const double gamma_prior =
        (priors.phi_shape - 1.0) * std::log(phi) - priors.phi_rate * phi;
    // + log_sigma2: Jacobian of sampling sigma^2 through t = log sigma^2.
    return loglik + half_normal + gamma_prior + log_sigma2;
}

RwChain run_rw_chain(const std::function<double(const Eigen::Vector2d&)>& log_target,
                     const Eigen::Vector2d& center, double scatter,
                     int iterations, std::uint64_t seed, double init_step,
                     bool adapt) {
    if (iterations < 8 || iterations % 2 != 0)
        throw argument_error("run_rw_chain: iterations must be even and >= 8");
    if (!(init_step > 0.0))
        throw argument_error("run_rw_chain: init_step must be positive");
    const int warm = iterations / 2;

    Rng rng(seed);
    Eigen::Vector2d u = center;
    u[0] += scatter * rng.normal();
    u[1] += scatter * rng.normal();
    double lp = log_target(u);

    Eigen::Matrix2d a = Eigen::Matrix2d::Identity() * init_step;
    std::vector<Eigen::Vector2d> path(iterations);
    int accepted_kept = 0;
    int window = 0;
    for (int t = 0; t < iterations; ++t) {
        Eigen::Vector2d z;
        z[0] = rng.normal();
        z[1] = rng.normal();
        const Eigen::Vector2d prop = u + a * z;
        const double lpp = log_target(prop);
        // uniform() is in (0, 1], so log is finite and -inf targets never
        // accept against a finite current state.
        if (std::log(rng.uniform()) < lpp - lp) {
            u = prop;
            lp = lpp;
            ++window;
            if (t >= warm) ++accepted_kept;
        }
        path[t] = u;
        if (adapt && t < warm && (t + 1) % 100 == 0) {
            a *= std::exp(window / 100.0 - 0.3);
            window = 0;
            if (t + 1 == warm / 2 || t + 1 == warm) {
                // Empirical covariance of the chain so far (after a brief
                // settling quarter), scaled by the 2.38/sqrt(d) rule.
                const int lo = warm / 4;
                const int len = t + 1 - lo;
                if (len >= 2) {
                    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
                    for (int s = lo; s <= t; ++s) mean += path[s];
                    mean /= len;
                    Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
                    for (int s = lo; s <= t; ++s) {
                        const Eigen::Vector2d d = path[s] - mean;
                        cov += d * d.transpose();
                    }
                    cov /= (len - 1);
                    cov += 1e-8 * Eigen::Matrix2d::Identity();
                    const Eigen::LLT<Eigen::Matrix2d> llt(cov);
                    if (llt.info() == Eigen::Success) {
                        const Eigen::Matrix2d lmat = llt.matrixL();
                        a = lmat * (2.38 / std::sqrt(2.0));
                    }
                }
            }
        }
    }
    RwChain out;
    out.draws.assign(path.begin() + warm, path.end());
    out.acceptance = double(accepted_kept) / (iterations - warm);
    return out;
}

McmcResult run_chains(double nu, const NeighborPlan& plan,
                      const LocationSet& locs, const std::vector<double>& y,
                      const PriorSpec& priors, const McmcOptions& options) {
    if (options.chains < 1)
        throw argument_error("run_chains: need at least one chain");
    if (!(options.init_phi > 0.0) || !(options.init_sigma2 > 0.0))
        throw argument_error("run_chains: initial parameters must be positive");
    if (static_cast<int>(y.size()) != locs.size())
        throw argument_error("run_chains: sample size does not match locations");

    // The sampler walks z = (log phi, log sigma^2); the extra z[0] is the
    // phi Jacobian so that the walk targets the posterior in z-space.
    auto target = [&](const Eigen::Vector2d& z) {
        return log_posterior(std::exp(z[0]), z[1], nu, plan, locs, y, priors) +
               z[0];
    };
    const Eigen::Vector2d center(std::log(options.init_phi),
                                 std::log(options.init_sigma2));

    McmcResult result;
    result.chains.resize(options.chains);
    parallel_for(options.chains, [&](std::int64_t c) {
        const RwChain raw =
            run_rw_chain(target, center, 0.3, options.iterations,
                         derive_seed(options.seed, static_cast<std::uint64_t>(c)),
                         options.init_step, options.adapt);
        McmcChain chain;
        const int kept = static_cast<int>(raw.draws.size());
        chain.phi.resize(kept);
        chain.sigma2.resize(kept);
        chain.log_post.resize(kept);
        for (int t = 0; t < kept; ++t) {
            const Eigen::Vector2d& z = raw.draws[t];
            chain.phi[t] = std::exp(z[0]);
            chain.sigma2[t] = std::exp(z[1]);
            chain.log_post[t] = target(z) - z[0];
        }
        chain.acceptance = raw.acceptance;
        result.chains[c] = std::move(chain);
    });

    std::vector<std::vector<double>> phis, sigma2s;
    for (const McmcChain& chain : result.chains) {
        phis.push_back(chain.phi);
        sigma2s.push_back(chain.sigma2);
    }
    result.rhat_phi = split_rhat(phis);
    result.rhat_sigma2 = split_rhat(sigma2s);
    for (std::size_t c = 0; c < result.chains.size(); ++c) {
        const double acc = result.chains[c].acceptance;
        if (acc < 0.01)
            result.warnings.push_back("chain " + std::to_string(c + 1) +
                                      ": acceptance rate below 1%");
        else if (acc > 0.99)
            result.warnings.push_back("chain " + std::to_string(c + 1) +
                                      ": acceptance rate above 99%");
    }
    return result;
}

double split_rhat(const std::vector<std::vector<double>>& chains) {
    if (chains.empty()) throw argument_error("split_rhat: no chains");
    const std::size_t n = chains.front().size();
    if (n < 4 || n % 2 != 0)
        throw argument_error("split_rhat: chain length must be even and >= 4");
    for (const auto& c : chains)
        if (c.size() != n) throw argument_error("split_rhat: unequal chain lengths");

    const std::size_t half = n / 2;
    std::vector<double> means, vars;
    for (const auto& c : chains) {
        for (int part = 0; part < 2; ++part) {
            const double* x = c.data() + part * half;
            double m = 0.0;
            for (std::size_t i = 0; i < half; ++i) m += x[i];
            m /= half;
            double v = 0.0;
            for (std::size_t i = 0; i < half; ++i) v += (x[i] - m) * (x[i] - m);
            v /= (half - 1);
            means.push_back(m);
            vars.push_back(v);
        }
    }
    const std::size_t m = means.size();
    double w = 0.0;
    for (double v : vars) w += v;
    w /= m;
    double grand = 0.0;
    for (double v : means) grand += v;
    grand /= m;
    double b = 0.0;
    for (double v : means) b += (v - grand) * (v - grand);
    b *= double(half) / (m - 1);
    if (!(w > 0.0))
        throw argument_error("split_rhat: zero within-chain variance");
    const double v_hat = (double(half) - 1.0) / half * w + b / half;
    return std::sqrt(v_hat / w);
}

double wasserstein1(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty())
        throw argument_error("wasserstein1: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a.size() == b.size()) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
        return s / a.size();
    }
    auto quantile = [](const std::vector<double>& x, double q) {
        const double pos = q * (x.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        if (lo + 1 >= x.size()) return x.back();
        const double frac = pos - lo;
        return x[lo] * (1.0 - frac) + x[lo + 1] * frac;
    };
    double s = 0.0;
    const int grid = 199;
    for (int i = 0; i < grid; ++i) {
        const double q = 0.005 + 0.005 * i;
        s += std::abs(quantile(a, q) - quantile(b, q));
    }
    return s / grid;
}

}  // namespace vecchia
