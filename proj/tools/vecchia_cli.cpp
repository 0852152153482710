/* Command-line driver for the Vecchia/Matern experiment suite.
 *
 * Exit codes: 0 success, 1 numerical failure (e.g. a covariance matrix
 * lost positive definiteness), 2 usage/config errors.
 */
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vecchia/common.hpp"
#include "vecchia/experiments.hpp"
#include "vecchia/io.hpp"
#include "vecchia/parallel.hpp"

namespace {

struct CommonOpts {
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out;
    std::string config_path;
    std::string preset;  // study subcommands only
    CLI::App* sub = nullptr;
};

void attach_common(CLI::App* sub, CommonOpts& opts) {
    opts.sub = sub;
    sub->add_option("--seed", opts.seed,
                    "RNG seed; all outputs are a pure function of it");
    sub->add_option("--threads", opts.threads,
                    "Worker thread cap (0 = hardware default)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--out", opts.out,
                    "Output directory (default: $VECCHIA_OUTDIR or '.')");
    sub->add_option("--config", opts.config_path,
                    "JSON config file; fields override preset/defaults")
        ->check(CLI::ExistingFile);
}

void attach_preset_flag(CommonOpts& opts) {
    opts.sub->add_option("--preset", opts.preset,
                         "Start from a named preset configuration "
                         "(see 'preset --list')");
}

nlohmann::json preset_config(const std::string& name,
                             const std::string& for_command) {
    const auto& table = vecchia::presets();
    const auto it = table.find(name);
    if (it == table.end())
        throw vecchia::config_error("unknown preset '" + name +
                                    "' (try 'preset --list')");
    if (!for_command.empty() && it->second.command != for_command)
        throw vecchia::config_error("preset '" + name + "' is a " +
                                    it->second.command +
                                    " configuration, not " + for_command);
    return it->second.config;
}

nlohmann::json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw vecchia::config_error(path + ": cannot open config file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw vecchia::config_error(path + ": invalid JSON: " + e.what());
    }
    if (!j.is_object())
        throw vecchia::config_error(path + ": config must be a JSON object");
    return j;
}

vecchia::RunContext make_context(const CommonOpts& opts) {
    vecchia::RunContext ctx;
    ctx.has_seed = opts.sub->count("--seed") > 0;
    ctx.seed = opts.seed;
    ctx.outdir = vecchia::resolve_outdir(opts.out);
    if (opts.sub->count("--threads") > 0)
        vecchia::set_max_threads(opts.threads);
    return ctx;
}

int dispatch(const std::string& command, const nlohmann::json& config,
             const std::string& data_path, const vecchia::RunContext& ctx) {
    std::vector<std::string> paths;
    if (command == "simulate")
        paths = vecchia::run_simulate(config, ctx);
    else if (command == "fit")
        paths = vecchia::run_fit(config, data_path, ctx);
    else if (command == "assumption-check")
        paths = vecchia::run_assumption_check(config, ctx);
    else if (command == "cn-study")
        paths = vecchia::run_cn_study(config, ctx);
    else if (command == "residual-acf")
        paths = vecchia::run_residual_acf(config, ctx);
    else if (command == "posterior")
        paths = vecchia::run_posterior(config, ctx);
    else
        throw vecchia::config_error("unknown command '" + command + "'");
    for (const std::string& p : paths) std::cout << p << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vecchia-approximation experiments for Matern Gaussian "
                 "processes: simulation, estimation, fixed-domain "
                 "diagnostics, and posterior sampling"};
    app.set_version_flag("--version", std::string(vecchia::kVersion));
    app.require_subcommand(1);

    CommonOpts sim_o, fit_o, assum_o, cn_o, acf_o, post_o, preset_o;
    std::string fit_data;
    std::string preset_name;
    bool preset_list = false;

    attach_common(app.add_subcommand("simulate",
                                     "Draw one exact GP sample on a grid "
                                     "(writes sample.csv)"),
                  sim_o);
    CLI::App* fit_sub = app.add_subcommand(
        "fit", "Profile-likelihood fit of (phi, sigma2) from a sample.csv "
               "(writes fit.json)");
    fit_sub->add_option("data", fit_data, "Input sample.csv")
        ->required()
        ->check(CLI::ExistingFile);
    attach_common(fit_sub, fit_o);
    attach_common(app.add_subcommand("assumption-check",
                                     "Deterministic screening statistic over "
                                     "(nu, n) grids (writes assumption.csv)"),
                  assum_o);
    attach_common(app.add_subcommand("cn-study",
                                     "Monte Carlo campaign for the centered "
                                     "c_n statistic (writes cn.csv)"),
                  cn_o);
    attach_common(app.add_subcommand("residual-acf",
                                     "Residual-whiteness diagnostic across "
                                     "conditioning sizes (writes acf.csv, "
                                     "acf_summary.json)"),
                  acf_o);
    attach_common(app.add_subcommand("posterior",
                                     "Random-walk Metropolis posteriors under "
                                     "full and Vecchia likelihoods (writes "
                                     "draws_<tag>.csv, posterior_summary.json)"),
                  post_o);
    for (CommonOpts* o : {&sim_o, &fit_o, &assum_o, &cn_o, &acf_o, &post_o})
        attach_preset_flag(*o);

    CLI::App* preset_sub = app.add_subcommand(
        "preset", "Run a named, pinned experiment configuration");
    preset_sub->add_option("name", preset_name, "Preset name (see --list)");
    preset_sub->add_flag("--list", preset_list,
                         "List available presets and exit");
    attach_common(preset_sub, preset_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (preset_sub->parsed()) {
            if (preset_list) {
                for (const auto& [name, preset] : vecchia::presets())
                    std::cout << name << "\t" << preset.command << "\n";
                return 0;
            }
            if (preset_name.empty())
                throw vecchia::config_error(
                    "preset: a preset name is required (try --list)");
            nlohmann::json config = preset_config(preset_name, "");
            if (!preset_o.config_path.empty())
                config.update(load_config_file(preset_o.config_path));
            return dispatch(vecchia::presets().at(preset_name).command, config,
                            "", make_context(preset_o));
        }

        for (CommonOpts* o : {&sim_o, &fit_o, &assum_o, &cn_o, &acf_o, &post_o})
            if (o->sub->parsed()) {
                nlohmann::json config =
                    o->preset.empty()
                        ? nlohmann::json::object()
                        : preset_config(o->preset, o->sub->get_name());
                if (!o->config_path.empty())
                    config.update(load_config_file(o->config_path));
                return dispatch(o->sub->get_name(), config, fit_data,
                                make_context(*o));
            }
        std::cerr << "error: no command given\n";
        return 2;
    } catch (const vecchia::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const vecchia::argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const vecchia::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 1;
    }
}
