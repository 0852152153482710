/* Posterior sampling for (phi, sigma^2) under a half-normal scale prior
 * and a Gamma decay prior: adaptive random-walk Metropolis on
 * (log phi, log sigma^2), split-Rhat, and Wasserstein-1 comparison. */
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vecchia/grid.hpp"
#include "vecchia/plan.hpp"

namespace vecchia {

struct PriorSpec {
    double sigma2_scale = 3.4641016151377544;  // half-normal sd on sigma^2
    double phi_shape = 5.0;                    // Gamma shape on phi
    double phi_rate = 0.5;                     // Gamma rate on phi
};

// Log posterior density of (phi, t = log sigma^2) up to an additive
// constant: log-likelihood under the plan (the dense Cholesky likelihood
// when the plan is full conditioning, the factorized one otherwise)
// plus log priors and the sigma^2 -> t change-of-variables term.
// Out-of-support or numerically failing parameters yield -infinity
// (the likelihood failure is reported once on stderr).
double log_posterior(double phi, double log_sigma2, double nu,
                     const NeighborPlan& plan, const LocationSet& locs,
                     const std::vector<double>& y,
                     const PriorSpec& priors = {});

// One adaptive random-walk Metropolis chain over R^2.  The chain starts at
// center + scatter * z (z standard normal) and runs `iterations` steps; the
// first half is warm-up during which the proposal is tuned (step-scale
// every 100 steps, proposal covariance re-estimated twice) and discarded.
// Returned draws are the retained second half; acceptance is the fraction
// of accepted retained steps.  Proposals after warm-up are frozen, so the
// retained chain is a valid Metropolis sample of log_target.
struct RwChain {
    std::vector<Eigen::Vector2d> draws;
    double acceptance = 0.0;
};
RwChain run_rw_chain(const std::function<double(const Eigen::Vector2d&)>& log_target,
                     const Eigen::Vector2d& center, double scatter,
                     int iterations, std::uint64_t seed, double init_step = 0.1,
                     bool adapt = true);

struct McmcOptions {
    int chains = 3;
    int iterations = 2000;  // per chain, first half warm-up
    std::uint64_t seed = 0;
    double init_phi = 10.0;     // chain starts scatter around these two
    double init_sigma2 = 1.0;
    double init_step = 0.1;
    bool adapt = true;
};

struct McmcChain {
    std::vector<double> phi;
    std::vector<double> sigma2;
    std::vector<double> log_post;  // log_posterior at the draw
    double acceptance = 0.0;
};

struct McmcResult {
    std::vector<McmcChain> chains;
    double rhat_phi = 0.0;
    double rhat_sigma2 = 0.0;
    std::vector<std::string> warnings;  // e.g. acceptance below 1% / above 99%
};

McmcResult run_chains(double nu, const NeighborPlan& plan,
                      const LocationSet& locs, const std::vector<double>& y,
                      const PriorSpec& priors = {},
                      const McmcOptions& options = {});

// Split-Rhat over kept chains: each chain is halved, and
// Rhat = sqrt(((L-1)/L W + B/L) / W) over the 2C half-sequences of
// length L.  Chains must share an even length >= 4.
double split_rhat(const std::vector<std::vector<double>>& chains);

// Wasserstein-1 distance between two empirical distributions: the exact
// mean |sorted a - sorted b| when sizes match, otherwise a 199-point
// quantile-grid approximation (linear-interpolation quantiles).
double wasserstein1(std::vector<double> a, std::vector<double> b);

}  // namespace vecchia
