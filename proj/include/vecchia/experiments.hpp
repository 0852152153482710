/* Study drivers behind the CLI: each validates its JSON configuration
 * strictly (unknown or ill-typed fields raise config_error naming the
 * field), runs the study, writes seed-stamped artifacts into the output
 * directory, and returns the paths written. */
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace vecchia {

struct RunContext {
    bool has_seed = false;
    std::uint64_t seed = 0;
    std::string outdir = ".";
};

// Draw one sample path of the process onto a grid -> sample.csv.
std::vector<std::string> run_simulate(const nlohmann::json& config,
                                      const RunContext& ctx);

// Profile-likelihood fit of (phi, sigma^2) on a sample file -> fit.json.
std::vector<std::string> run_fit(const nlohmann::json& config,
                                 const std::string& data_path,
                                 const RunContext& ctx);

// Deterministic assumption-statistic trends over (nu, n) -> assumption.csv.
std::vector<std::string> run_assumption_check(const nlohmann::json& config,
                                              const RunContext& ctx);

// Monte Carlo c_n campaign over (n, nu) cells -> cn.csv.
std::vector<std::string> run_cn_study(const nlohmann::json& config,
                                      const RunContext& ctx);

// Residual autocorrelation adequacy study over a k list
// -> acf.csv + acf_summary.json.
std::vector<std::string> run_residual_acf(const nlohmann::json& config,
                                          const RunContext& ctx);

// Posterior comparison across likelihood tags
// -> draws_<tag>.csv per tag + posterior_summary.json.
std::vector<std::string> run_posterior(const nlohmann::json& config,
                                       const RunContext& ctx);

struct Preset {
    std::string command;     // the subcommand the preset belongs to
    nlohmann::json config;   // its full study configuration
};

// Named study designs reproducing the simulation figures: paper-fig1 ..
// paper-fig7.
const std::map<std::string, Preset>& presets();

}  // namespace vecchia
