#include "vecchia/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <set>

#include "vecchia/asymptotics.hpp"
#include "vecchia/common.hpp"
#include "vecchia/diagnostics.hpp"
#include "vecchia/engine.hpp"
#include "vecchia/gp.hpp"
#include "vecchia/grid.hpp"
#include "vecchia/io.hpp"
#include "vecchia/kernel.hpp"
#include "vecchia/mcmc.hpp"
#include "vecchia/plan.hpp"
#include "vecchia/rng.hpp"

namespace vecchia {

namespace {

// Strict field-by-field reader: every consumed key is tracked, and
// finish() rejects anything left over, so typos surface as errors rather
// than silently running a default study.
class ConfigReader {
  public:
    ConfigReader(const nlohmann::json& j, std::string cmd)
        : j_(j), cmd_(std::move(cmd)) {
        if (!j_.is_object())
            throw config_error(cmd_ + ": config must be a JSON object");
        if (j_.contains("command")) {
            seen_.insert("command");
            if (!j_["command"].is_string() ||
                j_["command"].get<std::string>() != cmd_)
                throw config_error(cmd_ + ": config field 'command' names a "
                                          "different command");
        }
    }

    double num(const std::string& f, std::optional<double> def = {}) {
        const nlohmann::json* v = fetch(f, def.has_value());
        if (!v) return *def;
        if (!v->is_number())
            throw config_error(field(f) + " must be a number");
        return v->get<double>();
    }

    int integer(const std::string& f, std::optional<int> def = {}) {
        const nlohmann::json* v = fetch(f, def.has_value());
        if (!v) return *def;
        if (!v->is_number_integer())
            throw config_error(field(f) + " must be an integer");
        return v->get<int>();
    }

    bool flag(const std::string& f, bool def) {
        const nlohmann::json* v = fetch(f, true);
        if (!v) return def;
        if (!v->is_boolean())
            throw config_error(field(f) + " must be a boolean");
        return v->get<bool>();
    }

    std::string str(const std::string& f, std::optional<std::string> def = {}) {
        const nlohmann::json* v = fetch(f, def.has_value());
        if (!v) return *def;
        if (!v->is_string())
            throw config_error(field(f) + " must be a string");
        return v->get<std::string>();
    }

    std::vector<double> num_list(const std::string& f) {
        const nlohmann::json* v = fetch(f, false);
        if (!v->is_array() || v->empty())
            throw config_error(field(f) + " must be a nonempty array of numbers");
        std::vector<double> out;
        for (const auto& e : *v) {
            if (!e.is_number())
                throw config_error(field(f) + " must contain only numbers");
            out.push_back(e.get<double>());
        }
        return out;
    }

    std::vector<int> int_list(const std::string& f) {
        const nlohmann::json* v = fetch(f, false);
        if (!v->is_array() || v->empty())
            throw config_error(field(f) + " must be a nonempty array of integers");
        std::vector<int> out;
        for (const auto& e : *v) {
            if (!e.is_number_integer())
                throw config_error(field(f) + " must contain only integers");
            out.push_back(e.get<int>());
        }
        return out;
    }

    std::vector<std::string> str_list(const std::string& f,
                                      std::vector<std::string> def) {
        const nlohmann::json* v = fetch(f, true);
        if (!v) return def;
        if (!v->is_array() || v->empty())
            throw config_error(field(f) + " must be a nonempty array of strings");
        std::vector<std::string> out;
        for (const auto& e : *v) {
            if (!e.is_string())
                throw config_error(field(f) + " must contain only strings");
            out.push_back(e.get<std::string>());
        }
        return out;
    }

    void finish() const {
        for (const auto& item : j_.items())
            if (!seen_.count(item.key()))
                throw config_error(cmd_ + ": unknown config field '" +
                                   item.key() + "'");
    }

  private:
    std::string field(const std::string& f) const {
        return cmd_ + ": config field '" + f + "'";
    }
    const nlohmann::json* fetch(const std::string& f, bool optional) {
        seen_.insert(f);
        const auto it = j_.find(f);
        if (it == j_.end()) {
            if (optional) return nullptr;
            throw config_error(field(f) + " is required");
        }
        return &*it;
    }
    const nlohmann::json& j_;
    std::string cmd_;
    std::set<std::string> seen_;
};

std::string join_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

LocationSet make_grid(int dim, int n, const std::string& cmd) {
    if (dim == 1) return LocationSet::grid_1d(n);
    if (dim != 2)
        throw config_error(cmd + ": config field 'dim' must be 1 or 2");
    const int side = static_cast<int>(std::lround(std::sqrt(double(n))));
    if (side * side != n)
        throw config_error(cmd + ": config field 'n' must be a perfect square "
                                 "when dim is 2, got " + std::to_string(n));
    return LocationSet::grid_2d(side);
}

void require_seed(const RunContext& ctx, const std::string& cmd) {
    if (!ctx.has_seed)
        throw config_error(cmd + ": --seed is required (campaign outputs must "
                                 "be reproducible)");
}

OutputMeta meta_for(const nlohmann::json& resolved, const RunContext& ctx) {
    OutputMeta meta;
    meta.config_line = resolved.dump();
    meta.has_seed = ctx.has_seed;
    meta.seed = ctx.seed;
    return meta;
}

double interp_quantile(const std::vector<double>& sorted, double q) {
    const double pos = q * (sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - lo;
    return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

nlohmann::json marginal_summary(std::vector<double> draws) {
    std::sort(draws.begin(), draws.end());
    double mean = 0.0;
    for (double v : draws) mean += v;
    mean /= draws.size();
    return {{"mean", mean},
            {"q025", interp_quantile(draws, 0.025)},
            {"q25", interp_quantile(draws, 0.25)},
            {"median", interp_quantile(draws, 0.5)},
            {"q75", interp_quantile(draws, 0.75)},
            {"q975", interp_quantile(draws, 0.975)}};
}

}  // namespace

std::vector<std::string> run_simulate(const nlohmann::json& config,
                                      const RunContext& ctx) {
    require_seed(ctx, "simulate");
    ConfigReader r(config, "simulate");
    const int dim = r.integer("dim", 1);
    const int n = r.integer("n");
    const double nu = r.num("nu");
    const double phi = r.num("phi");
    const double sigma2 = r.num("sigma2");
    r.finish();

    const LocationSet locs = make_grid(dim, n, "simulate");
    const KernelParams params(sigma2, phi, nu);
    const GPSample sample = simulate(params, locs, ctx.seed);

    const nlohmann::json resolved = {{"command", "simulate"}, {"dim", dim},
                                     {"n", n},                {"nu", nu},
                                     {"phi", phi},            {"sigma2", sigma2}};
    const std::string path = join_path(ctx.outdir, "sample.csv");
    write_sample_csv(path, meta_for(resolved, ctx), dim, locs.points(),
                     sample.values);
    return {path};
}

std::vector<std::string> run_fit(const nlohmann::json& config,
                                 const std::string& data_path,
                                 const RunContext& ctx) {
    ConfigReader r(config, "fit");
    const double nu = r.num("nu");
    const std::string rule_name = r.str("k_rule", "logn");
    const double k_param = r.num("k_param", 1.5);
    const double lo_factor = r.num("bracket_lo_factor", 0.1);
    const double hi_factor = r.num("bracket_hi_factor", 10.0);
    const double phi_ref_cfg = r.num("phi_ref", 0.0);  // 0 = take from data
    r.finish();

    const SampleData data = read_sample_csv(data_path);
    double phi_ref = phi_ref_cfg;
    if (!(phi_ref > 0.0)) {
        if (data.config.contains("phi") && data.config["phi"].is_number())
            phi_ref = data.config["phi"].get<double>();
        else
            throw config_error("fit: config field 'phi_ref' is required when "
                               "the data file records no phi");
    }

    const LocationSet locs = LocationSet::from_points(data.points, data.dim);
    const int n = locs.size();
    const KRule rule = parse_k_rule(rule_name);
    const int k = k_schedule(n, rule, k_param);
    const NeighborPlan plan =
        rule == KRule::full ? full_conditioning(locs) : nearest_neighbors(locs, k);
    const FitResult fit = fit_phi(nu, plan, locs, data.values,
                                  lo_factor * phi_ref, hi_factor * phi_ref);
    const MicroergodicValue me =
        microergodic(KernelParams(fit.sigma2_hat, fit.phi_hat, nu));

    const nlohmann::json resolved = {{"command", "fit"},
                                     {"nu", nu},
                                     {"k_rule", rule_name},
                                     {"k_param", k_param},
                                     {"bracket_lo_factor", lo_factor},
                                     {"bracket_hi_factor", hi_factor},
                                     {"phi_ref", phi_ref}};
    nlohmann::json out = {
        {"tool", "vecchia_cli"},
        {"version", kVersion},
        {"config", resolved},
        {"n", n},
        {"dim", data.dim},
        {"k", k},
        {"estimates",
         {{"phi_hat", fit.phi_hat},
          {"sigma2_hat", fit.sigma2_hat},
          {"microergodic", me.value},
          {"boundary_warning", fit.boundary_warning}}}};
    if (!data.config.is_null()) out["data_config"] = data.config;
    if (data.has_seed) out["data_seed"] = data.seed;
    if (ctx.has_seed) out["seed"] = ctx.seed;

    const std::string path = join_path(ctx.outdir, "fit.json");
    write_json_file(path, out);
    return {path};
}

std::vector<std::string> run_assumption_check(const nlohmann::json& config,
                                              const RunContext& ctx) {
    ConfigReader r(config, "assumption-check");
    const std::vector<double> nu_list = r.num_list("nu_list");
    const std::vector<int> n_list = r.int_list("n_list");
    const double calib_distance = r.num("calib_distance", 0.2);
    const double calib_level = r.num("calib_level", 0.05);
    const double phi1_factor = r.num("phi1_factor", 1.2);
    r.finish();

    const nlohmann::json resolved = {{"command", "assumption-check"},
                                     {"nu_list", nu_list},
                                     {"n_list", n_list},
                                     {"calib_distance", calib_distance},
                                     {"calib_level", calib_level},
                                     {"phi1_factor", phi1_factor}};

    std::vector<std::string> rows;
    for (double nu : nu_list) {
        const double phi0 = calibrate_phi(nu, calib_distance, calib_level);
        const KernelParams theta0(1.0, phi0, nu);
        for (int n : n_list) {
            // The assumption study runs on the closed grid {i/n : 0..n}.
            const LocationSet locs = LocationSet::grid_1d_closed(n);
            const double stat = assumption1_stat(theta0, phi1_factor * phi0, locs);
            rows.push_back(fmt_double(nu) + "," + std::to_string(n) + "," +
                           fmt_double(stat));
        }
    }
    const std::string path = join_path(ctx.outdir, "assumption.csv");
    write_csv(path, meta_for(resolved, ctx), "nu,n,stat", rows);
    return {path};
}

std::vector<std::string> run_cn_study(const nlohmann::json& config,
                                      const RunContext& ctx) {
    require_seed(ctx, "cn-study");
    ConfigReader r(config, "cn-study");
    CnStudyConfig cfg;
    cfg.dim = r.integer("dim", 1);
    {
        const std::vector<int> n_list = r.int_list("n_list");
        cfg.n_list = n_list;
    }
    cfg.nu_list = r.num_list("nu_list");
    cfg.calib_distance = r.num("calib_distance", 0.2);
    cfg.calib_level = r.num("calib_level", 0.05);
    const std::string rule_name = r.str("k_rule", "logn");
    cfg.k_rule = parse_k_rule(rule_name);
    cfg.k_param = r.num("k_param", 1.5);
    cfg.phi1_factor = r.num("phi1_factor", 1.2);
    cfg.replicates = r.integer("replicates", 100);
    cfg.sigma2 = r.num("sigma2", 1.0);
    cfg.seed = ctx.seed;
    r.finish();

    const nlohmann::json resolved = {{"command", "cn-study"},
                                     {"dim", cfg.dim},
                                     {"n_list", cfg.n_list},
                                     {"nu_list", cfg.nu_list},
                                     {"calib_distance", cfg.calib_distance},
                                     {"calib_level", cfg.calib_level},
                                     {"k_rule", rule_name},
                                     {"k_param", cfg.k_param},
                                     {"phi1_factor", cfg.phi1_factor},
                                     {"replicates", cfg.replicates},
                                     {"sigma2", cfg.sigma2}};

    const std::vector<CnCellResult> results = cn_campaign(cfg);
    std::vector<std::string> rows;
    for (const CnCellResult& res : results)
        rows.push_back(std::to_string(res.dim) + "," + std::to_string(res.n) +
                       "," + fmt_double(res.nu) + "," + std::to_string(res.k) +
                       "," + fmt_double(res.mean_cn) + "," +
                       fmt_double(res.sd_cn) + "," +
                       std::to_string(res.replicates) + "," +
                       std::to_string(res.seed));
    const std::string path = join_path(ctx.outdir, "cn.csv");
    write_csv(path, meta_for(resolved, ctx),
              "dim,n,nu,k,mean_cn,sd_cn,replicates,seed", rows);
    return {path};
}

std::vector<std::string> run_residual_acf(const nlohmann::json& config,
                                          const RunContext& ctx) {
    require_seed(ctx, "residual-acf");
    ConfigReader r(config, "residual-acf");
    const int dim = r.integer("dim", 1);
    const int n = r.integer("n");
    const double nu = r.num("nu");
    const double phi = r.num("phi");
    const double sigma2 = r.num("sigma2");
    const std::vector<int> k_list = r.int_list("k_list");
    const int max_lag = r.integer("max_lag", 30);
    const double band_multiplier = r.num("band_multiplier", 1.96);
    const bool fit = r.flag("fit", true);
    const double lo_factor = r.num("bracket_lo_factor", 0.1);
    const double hi_factor = r.num("bracket_hi_factor", 10.0);
    r.finish();

    const LocationSet locs = make_grid(dim, n, "residual-acf");
    const KernelParams truth(sigma2, phi, nu);
    const GPSample sample = simulate(truth, locs, ctx.seed);

    std::vector<NeighborPlan> plans;
    for (int k : k_list) {
        if (k < 1 || k >= locs.size())
            throw config_error("residual-acf: config field 'k_list' entries "
                               "must be in [1, n-1]");
        plans.push_back(nearest_neighbors(locs, k));
    }

    AdequacyOptions opts;
    opts.max_lag = max_lag;
    opts.band_multiplier = band_multiplier;
    opts.fit = fit;
    opts.bracket_lo_factor = lo_factor;
    opts.bracket_hi_factor = hi_factor;
    const std::vector<AdequacyRow> report =
        adequacy_report(truth, plans, locs, sample.values, opts);

    const nlohmann::json resolved = {{"command", "residual-acf"},
                                     {"dim", dim},
                                     {"n", n},
                                     {"nu", nu},
                                     {"phi", phi},
                                     {"sigma2", sigma2},
                                     {"k_list", k_list},
                                     {"max_lag", max_lag},
                                     {"band_multiplier", band_multiplier},
                                     {"fit", fit},
                                     {"bracket_lo_factor", lo_factor},
                                     {"bracket_hi_factor", hi_factor}};

    std::vector<std::string> rows;
    for (const AdequacyRow& row : report)
        for (int lag = 0; lag <= max_lag; ++lag)
            rows.push_back(std::to_string(row.k) + "," + std::to_string(lag) +
                           "," + fmt_double(row.acf[lag]));
    const std::string acf_path = join_path(ctx.outdir, "acf.csv");
    write_csv(acf_path, meta_for(resolved, ctx), "k,lag,acf", rows);

    nlohmann::json summary_rows = nlohmann::json::array();
    for (const AdequacyRow& row : report) {
        nlohmann::json jrow = {{"k", row.k},
                               {"inside_frac", row.inside_frac},
                               {"max_abs_acf", row.max_abs_acf},
                               {"boundary_warning", row.boundary_warning}};
        if (fit) {
            jrow["phi_hat"] = row.phi_hat;
            jrow["sigma2_hat"] = row.sigma2_hat;
        }
        summary_rows.push_back(jrow);
    }
    const nlohmann::json summary = {
        {"tool", "vecchia_cli"},
        {"version", kVersion},
        {"config", resolved},
        {"seed", ctx.seed},
        {"band", band_multiplier / std::sqrt(double(n))},
        {"rows", summary_rows}};
    const std::string summary_path = join_path(ctx.outdir, "acf_summary.json");
    write_json_file(summary_path, summary);
    return {acf_path, summary_path};
}

std::vector<std::string> run_posterior(const nlohmann::json& config,
                                       const RunContext& ctx) {
    require_seed(ctx, "posterior");
    ConfigReader r(config, "posterior");
    const int dim = r.integer("dim", 1);
    const int n = r.integer("n");
    const double nu = r.num("nu");
    const double phi = r.num("phi");
    const double sigma2 = r.num("sigma2");
    const std::vector<std::string> tags = r.str_list(
        "tags", {"full", "vecchia-4", "vecchia-8", "vecchia-16"});
    const int chains = r.integer("chains", 3);
    const int iterations = r.integer("iterations", 2000);
    const double init_step = r.num("init_step", 0.1);
    PriorSpec priors;
    priors.sigma2_scale = r.num("prior_sigma2_scale", priors.sigma2_scale);
    priors.phi_shape = r.num("prior_phi_shape", priors.phi_shape);
    priors.phi_rate = r.num("prior_phi_rate", priors.phi_rate);
    r.finish();

    const LocationSet locs = make_grid(dim, n, "posterior");
    const KernelParams truth(sigma2, phi, nu);
    // One shared dataset: stream 0 of the seed; chains of tag t use
    // stream t+1.
    const GPSample sample =
        simulate(truth, locs, derive_seed(ctx.seed, std::uint64_t{0}));

    struct TagRun {
        std::string tag;
        NeighborPlan plan;
    };
    std::vector<TagRun> runs;
    std::set<std::string> uniq;
    for (const std::string& tag : tags) {
        if (!uniq.insert(tag).second)
            throw config_error("posterior: config field 'tags' repeats '" +
                               tag + "'");
        if (tag == "full") {
            runs.push_back({tag, full_conditioning(locs)});
            continue;
        }
        const std::string prefix = "vecchia-";
        if (tag.rfind(prefix, 0) == 0) {
            int k = 0;
            try {
                std::size_t used = 0;
                k = std::stoi(tag.substr(prefix.size()), &used);
                if (used != tag.size() - prefix.size()) throw std::invalid_argument(tag);
            } catch (const std::exception&) {
                k = 0;
            }
            if (k >= 1 && k < locs.size()) {
                runs.push_back({tag, nearest_neighbors(locs, k)});
                continue;
            }
        }
        throw config_error("posterior: config field 'tags' entry '" + tag +
                           "' is not 'full' or 'vecchia-<k>' with k in [1, n-1]");
    }

    const nlohmann::json resolved = {{"command", "posterior"},
                                     {"dim", dim},
                                     {"n", n},
                                     {"nu", nu},
                                     {"phi", phi},
                                     {"sigma2", sigma2},
                                     {"tags", tags},
                                     {"chains", chains},
                                     {"iterations", iterations},
                                     {"init_step", init_step},
                                     {"prior_sigma2_scale", priors.sigma2_scale},
                                     {"prior_phi_shape", priors.phi_shape},
                                     {"prior_phi_rate", priors.phi_rate}};
    const OutputMeta meta = meta_for(resolved, ctx);

    std::vector<std::string> written;
    nlohmann::json tag_summaries = nlohmann::json::object();
    std::vector<double> me_full;  // pooled microergodic draws of the full tag
    std::map<std::string, std::vector<double>> me_by_tag;

    for (std::size_t t = 0; t < runs.size(); ++t) {
        McmcOptions opts;
        opts.chains = chains;
        opts.iterations = iterations;
        opts.seed = derive_seed(ctx.seed, static_cast<std::uint64_t>(t + 1));
        opts.init_phi = phi;
        opts.init_sigma2 = sigma2;
        opts.init_step = init_step;
        const McmcResult res =
            run_chains(nu, runs[t].plan, locs, sample.values, priors, opts);

        std::vector<std::string> rows;
        std::vector<double> phi_all, s2_all, me_all, acc;
        for (std::size_t c = 0; c < res.chains.size(); ++c) {
            const McmcChain& chain = res.chains[c];
            for (std::size_t i = 0; i < chain.phi.size(); ++i) {
                rows.push_back(std::to_string(c + 1) + "," +
                               std::to_string(i + 1) + "," +
                               fmt_double(chain.phi[i]) + "," +
                               fmt_double(chain.sigma2[i]) + "," +
                               fmt_double(chain.log_post[i]));
                phi_all.push_back(chain.phi[i]);
                s2_all.push_back(chain.sigma2[i]);
                me_all.push_back(chain.sigma2[i] *
                                 std::pow(chain.phi[i], 2.0 * nu));
            }
            acc.push_back(chain.acceptance);
        }
        const std::string draws_path =
            join_path(ctx.outdir, "draws_" + runs[t].tag + ".csv");
        write_csv(draws_path, meta, "chain,iteration,phi,sigma2,log_post", rows);
        written.push_back(draws_path);

        nlohmann::json s = {{"acceptance", acc},
                            {"rhat_phi", res.rhat_phi},
                            {"rhat_sigma2", res.rhat_sigma2},
                            {"warnings", res.warnings},
                            {"phi", marginal_summary(phi_all)},
                            {"sigma2", marginal_summary(s2_all)},
                            {"microergodic", marginal_summary(me_all)}};
        tag_summaries[runs[t].tag] = std::move(s);
        me_by_tag[runs[t].tag] = std::move(me_all);
        if (runs[t].tag == "full") me_full = me_by_tag["full"];
    }

    if (!me_full.empty())
        for (auto& [tag, draws] : me_by_tag)
            if (tag != "full")
                tag_summaries[tag]["w1_microergodic_vs_full"] =
                    wasserstein1(me_full, draws);

    const nlohmann::json summary = {{"tool", "vecchia_cli"},
                                    {"version", kVersion},
                                    {"config", resolved},
                                    {"seed", ctx.seed},
                                    {"truth_microergodic",
                                     microergodic(truth).value},
                                    {"tags", tag_summaries}};
    const std::string summary_path =
        join_path(ctx.outdir, "posterior_summary.json");
    write_json_file(summary_path, summary);
    written.push_back(summary_path);
    return written;
}

const std::map<std::string, Preset>& presets() {
    static const std::map<std::string, Preset> table = [] {
        std::map<std::string, Preset> m;
        const nlohmann::json nus = {0.25, 0.5, 1.0, 1.5, 2.0};
        m["paper-fig1"] = {
            "assumption-check",
            {{"nu_list", nus},
             {"n_list", {100, 200, 300, 400, 500, 600, 700, 800, 900, 1000,
                         1100, 1200}},
             {"calib_distance", 0.2},
             {"calib_level", 0.05},
             {"phi1_factor", 1.2}}};
        m["smoke"] = {"cn-study",
                      {{"dim", 1},
                       {"n_list", {64, 128, 256}},
                       {"nu_list", nus},
                       {"calib_distance", 0.2},
                       {"calib_level", 0.05},
                       {"k_rule", "logn"},
                       {"k_param", 1.5},
                       {"phi1_factor", 1.2},
                       {"replicates", 20},
                       {"sigma2", 1.0}}};
        m["paper-fig2"] = {"cn-study",
                           {{"dim", 1},
                            {"n_list", {64, 128, 256, 512, 1024, 2048}},
                            {"nu_list", nus},
                            {"calib_distance", 0.2},
                            {"calib_level", 0.05},
                            {"k_rule", "logn"},
                            {"k_param", 1.5},
                            {"phi1_factor", 1.2},
                            {"replicates", 100},
                            {"sigma2", 1.0}}};
        m["paper-fig3"] = {"cn-study",
                           {{"dim", 2},
                            {"n_list", {121, 256, 529, 1024, 2025, 4096}},
                            {"nu_list", nus},
                            {"calib_distance", 0.4},
                            {"calib_level", 0.05},
                            {"k_rule", "logn"},
                            {"k_param", 1.5},
                            {"phi1_factor", 1.2},
                            {"replicates", 100},
                            {"sigma2", 1.0}}};
        m["paper-fig4"] = {"residual-acf",
                           {{"dim", 1},
                            {"n", 300},
                            {"nu", 2.0},
                            {"phi", 10.7},
                            {"sigma2", 1.0},
                            {"k_list", {2, 4, 5, 8}},
                            {"max_lag", 30}}};
        m["paper-fig5"] = {"residual-acf",
                           {{"dim", 2},
                            {"n", 900},
                            {"nu", 1.5},
                            {"phi", 9.5},
                            {"sigma2", 1.0},
                            {"k_list", {4, 6, 8, 10}},
                            {"max_lag", 30}}};
        m["paper-fig6"] = {"posterior",
                           {{"dim", 1},
                            {"n", 300},
                            {"nu", 2.0},
                            {"phi", 10.7},
                            {"sigma2", 1.0},
                            {"tags", {"full", "vecchia-4", "vecchia-8",
                                      "vecchia-16"}},
                            {"chains", 3},
                            {"iterations", 2000}}};
        m["paper-fig7"] = {"posterior",
                           {{"dim", 2},
                            {"n", 900},
                            {"nu", 1.5},
                            {"phi", 9.5},
                            {"sigma2", 1.0},
                            {"tags", {"full", "vecchia-4", "vecchia-8",
                                      "vecchia-16"}},
                            {"chains", 3},
                            {"iterations", 2000}}};
        return m;
    }();
    return table;
}

}  // namespace vecchia
