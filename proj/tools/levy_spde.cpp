#include <levyspde/chaos.hpp>
#include <levyspde/checks.hpp>
#include <levyspde/config.hpp>
#include <levyspde/errors.hpp>
#include <levyspde/linear.hpp>
#include <levyspde/prm.hpp>
#include <levyspde/report.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace levyspde;

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    out << text;
}

unsigned resolve_workers(const CLI::Option* opt, unsigned flag_value,
                         unsigned config_value) {
    if (opt->count() > 0) return flag_value;
    if (const char* env = std::getenv("LEVY_SPDE_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return config_value;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw ConfigError("empty numeric list");
    return out;
}

// "lo:hi:log" or "lo:hi:lin" (10 points) or a plain comma list
std::vector<double> parse_grid(const std::string& s) {
    if (s.find(':') == std::string::npos) return parse_list(s);
    std::stringstream ss(s);
    std::string lo_s, hi_s, mode;
    std::getline(ss, lo_s, ':');
    std::getline(ss, hi_s, ':');
    std::getline(ss, mode, ':');
    const double lo = std::stod(lo_s), hi = std::stod(hi_s);
    const int n = 10;
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / (n - 1);
        out.push_back(mode == "log" ? lo * std::pow(hi / lo, f)
                                    : lo + f * (hi - lo));
    }
    return out;
}

struct CommonArgs {
    std::string config_path, out, format, kernel, op;
    double alpha = 0.0;
    int dim = 0;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* workers_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    CLI::Option* kernel_opt = nullptr;
    CLI::Option* op_opt = nullptr;
    CLI::Option* alpha_opt = nullptr;
    CLI::Option* dim_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--config", a.config_path, "JSON config file");
    a.seed_opt = cmd->add_option("--seed", a.seed, "master RNG seed");
    a.workers_opt = cmd->add_option("--workers", a.workers, "worker threads");
    a.out_opt = cmd->add_option("--out", a.out, "output path (default stdout)");
    a.format_opt = cmd->add_option("--format", a.format, "csv|json");
    a.kernel_opt = cmd->add_option("--kernel", a.kernel, "heat|riesz|bessel");
    a.op_opt = cmd->add_option("--op", a.op, "heat|wave");
    a.alpha_opt = cmd->add_option("--alpha", a.alpha, "kernel index alpha");
    a.dim_opt = cmd->add_option("--dim", a.dim, "spatial dimension");
}

RunConfig resolve_config(const CommonArgs& a) {
    RunConfig cfg = load_config_file(a.config_path);
    if (a.seed_opt->count()) cfg.seed = a.seed;
    cfg.workers = resolve_workers(a.workers_opt, a.workers, cfg.workers);
    if (a.out_opt->count()) cfg.out = a.out;
    if (a.format_opt->count()) cfg.format = a.format;
    if (a.kernel_opt->count()) cfg.kernel_family = a.kernel;
    if (a.op_opt->count()) cfg.op = a.op;
    if (a.alpha_opt->count()) cfg.kernel_alpha = a.alpha;
    if (a.dim_opt->count()) cfg.dim = a.dim;
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("format must be csv or json");
    return cfg;
}

int cmd_dalang(const RunConfig& cfg) {
    const ColorationKernel k = make_kernel(cfg);
    const bool check = dalang_check(k);
    const bool stable = cutoff_stable(k);
    double c_mu = std::numeric_limits<double>::quiet_NaN();
    if (check) c_mu = dalang_integral(k);
    if (cfg.format == "json") {
        nlohmann::json j = {{"family", cfg.kernel_family},
                            {"alpha", cfg.kernel_alpha},
                            {"dim", cfg.dim},
                            {"dalang_check", check},
                            {"cutoff_stable", stable},
                            {"c_mu", c_mu}};
        emit(cfg.out, j.dump(2) + "\n");
    } else {
        emit(cfg.out,
             sweep_csv({"family", "alpha", "dim", "dalang_check",
                        "cutoff_stable", "c_mu"},
                       {{cfg.kernel_family, format_double(cfg.kernel_alpha),
                         std::to_string(cfg.dim), check ? "1" : "0",
                         stable ? "1" : "0", format_double(c_mu)}}));
    }
    return 0;
}

int cmd_noise_check(const RunConfig& cfg) {
    const LevyMeasure nu = make_measure(cfg);
    const std::size_t trials = cfg.trials;
    nlohmann::json checks = nlohmann::json::array();
    bool any_fail = false;

    // isometry on a Gaussian bump
    {
        auto phi = [](double x) { return std::exp(-0.5 * x * x); };
        const Box1D box{-12.0, 12.0};
        const double exact =
            nu.moment(2.0) * std::sqrt(M_PI);  // m2 ||phi||_2^2
        auto draws = run_trials(cfg.seed, trials, cfg.workers,
                                [&](std::size_t, RandomStream& rs) {
            const PRMSample s = sample_prm(box, nu, rs);
            double acc = 0.0;
            for (std::size_t i = 0; i < s.xs.size(); ++i)
                acc += phi(s.xs[i]) * s.zs[i];
            acc -= nu.mean() *
                   std::sqrt(2.0 * M_PI);  // int phi = sqrt(2 pi)
            return acc * acc;
        });
        const double n = static_cast<double>(trials);
        const double mean = kahan_sum(draws) / n;
        double var = 0.0;
        for (double x : draws) var += (x - mean) * (x - mean);
        const double se = std::sqrt(var / (n - 1.0) / n);
        const bool pass = std::fabs(mean - exact) <= 3.0 * se;
        any_fail |= !pass;
        checks.push_back({{"test", "isometry_gauss_bump"},
                          {"estimate", mean},
                          {"exact", exact},
                          {"se", se},
                          {"pass", pass}});
    }

    // characteristic function at theta = 1 on the unit indicator
    {
        const Box1D box{0.0, 1.0};
        auto draws = run_trials(cfg.seed + 1, trials, cfg.workers,
                                [&](std::size_t, RandomStream& rs) {
            const PRMSample s = sample_prm(box, nu, rs);
            double acc = 0.0;
            for (double z : s.zs) acc += z;
            return acc - nu.mean();
        });
        std::vector<double> cs(draws.size());
        for (std::size_t i = 0; i < draws.size(); ++i)
            cs[i] = std::cos(draws[i]);
        const double emp = kahan_sum(cs) / static_cast<double>(trials);
        const double exact =
            char_function([](double) { return 1.0; }, box, nu, 1.0).real();
        const double tol = 4.0 / std::sqrt(static_cast<double>(trials));
        const bool pass = std::fabs(emp - exact) <= tol;
        any_fail |= !pass;
        checks.push_back({{"test", "char_function_theta_1"},
                          {"estimate", emp},
                          {"exact", exact},
                          {"se", tol / 3.0},
                          {"pass", pass}});
    }

    nlohmann::json j = {{"seed", cfg.seed},
                        {"trials", trials},
                        {"checks", checks}};
    emit(cfg.out, j.dump(2) + "\n");
    return any_fail ? 1 : 0;
}

int cmd_simulate(const RunConfig& cfg) {
    const auto op = make_operator(cfg);
    const auto k = make_kernel(cfg);
    const LevyMeasure nu = make_measure(cfg);
    const double b4 = cfg.bp_table.count("4") ? cfg.bp_table.at("4") : 4.0;

    std::vector<std::vector<std::string>> rows;
    bool any_fail = false;
    for (double t : cfg.t_grid) {
        for (double x : cfg.x_grid) {
            const FieldEstimate est =
                simulate_linear(op, k, nu, t, x, cfg.box_half_width,
                                cfg.trials, cfg.seed, cfg.workers);
            const double exact = exact_second_moment(op, k, t, nu.moment(2.0));
            std::string envelope4 = "";
            double env4 = std::numeric_limits<double>::quiet_NaN();
            try {
                env4 = p_moment_envelope(op, k, t, 4.0, b4, nu);
                envelope4 = format_double(env4);
            } catch (const Unsupported&) {
            }
            struct P {
                double p, moment, se, exact, env;
            };
            const std::vector<P> ps = {
                {1.0, est.mean, est.mean_se,
                 0.0, std::numeric_limits<double>::quiet_NaN()},
                {2.0, est.second, est.second_se, exact,
                 std::numeric_limits<double>::quiet_NaN()},
                {4.0, est.p4_norm, est.p4_norm_se,
                 std::numeric_limits<double>::quiet_NaN(), env4}};
            for (const auto& pr : ps) {
                bool pass = true;
                if (pr.p == 1.0) pass = std::fabs(pr.moment) <= 3.0 * pr.se;
                if (pr.p == 2.0)
                    pass = std::fabs(pr.moment - pr.exact) <= 3.0 * pr.se;
                if (pr.p == 4.0 && std::isfinite(pr.env))
                    pass = pr.moment <= pr.env;
                any_fail |= !pass;
                rows.push_back({format_double(t), format_double(x),
                                format_double(pr.p), format_double(pr.moment),
                                format_double(pr.se),
                                pr.p == 2.0 ? format_double(pr.exact) : "",
                                pr.p == 4.0 ? envelope4 : "",
                                pass ? "pass" : "fail"});
            }
        }
    }
    const std::string csv = sweep_csv(
        {"t", "x", "p", "mc_moment", "se", "exact", "envelope", "pass"}, rows);
    emit(cfg.out, csv);
    return any_fail ? 1 : 0;
}

int cmd_jp(const RunConfig& cfg, const std::string& t_grid_spec,
           const std::string& p_list_spec) {
    const auto op = make_operator(cfg);
    const auto k = make_kernel(cfg);
    const std::vector<double> ts =
        t_grid_spec.empty() ? cfg.t_grid : parse_grid(t_grid_spec);
    const std::vector<double> ps =
        p_list_spec.empty() ? cfg.p_grid : parse_list(p_list_spec);

    std::vector<std::vector<std::string>> rows;
    for (double t : ts) {
        for (double p : ps) {
            double norm = std::numeric_limits<double>::quiet_NaN();
            double bound = std::numeric_limits<double>::quiet_NaN();
            try {
                norm = jp_norm(op, k, t, p);
            } catch (const Unsupported&) {
            } catch (const GridTooCoarse&) {
            }
            try {
                bound = jp_bound(op, k, t, p);
            } catch (const Unsupported&) {
            }
            rows.push_back({format_double(t), format_double(p),
                            format_double(norm), format_double(bound),
                            format_double(norm / bound)});
        }
    }
    emit(cfg.out, sweep_csv({"t", "p", "jp_norm", "jp_bound", "ratio"}, rows));
    return 0;
}

int cmd_chaos(const RunConfig& cfg, const std::string& orders_spec,
              double m2_override) {
    const auto op = make_operator(cfg);
    const auto k = make_kernel(cfg);
    const double m2 = m2_override;
    std::vector<int> orders;
    for (double v : parse_list(orders_spec.empty() ? "1,2,3" : orders_spec))
        orders.push_back(static_cast<int>(v));
    const double t = cfg.t_grid.front();

    std::string certificate;
    {
        const SeriesCertificate cert =
            series_certificate(op, k, t, m2, cfg.tail_tol);
        std::ostringstream ss;
        ss << (cert.conclusive ? "conclusive" : "inconclusive") << ";N="
           << cert.n_terms << ";tail=" << format_double(cert.tail_bound);
        certificate = ss.str();
    }

    std::vector<std::vector<std::string>> rows;
    double cumulative = 0.0;
    for (int n : orders) {
        double jn_mc = std::numeric_limits<double>::quiet_NaN();
        double jn_se = std::numeric_limits<double>::quiet_NaN();
        try {
            const ChaosTermEstimate est = jn_estimate(
                op, k, t, n, cfg.trials, cfg.seed + n, cfg.workers);
            jn_mc = est.jn_value;
            jn_se = est.jn_se;
        } catch (const Unsupported&) {
        }
        const double bound = jn_bound(op, k, t, n);
        const double term_bound = std::pow(m2 * t, n) * bound;
        cumulative += term_bound;
        rows.push_back({std::to_string(n), format_double(jn_mc),
                        format_double(jn_se), format_double(bound),
                        format_double(term_bound), format_double(cumulative),
                        certificate});
    }
    emit(cfg.out,
         sweep_csv({"n", "jn_mc", "jn_se", "jn_bound", "term_bound",
                    "cumulative", "certificate"},
                   rows));
    return 0;
}

int cmd_acceptance(const RunConfig& cfg, double trial_scale) {
    AcceptanceOptions opt;
    opt.seed = cfg.seed;
    opt.workers = cfg.workers;
    opt.trial_scale = trial_scale;
    const Report rep = run_acceptance(opt);
    emit(cfg.out,
         cfg.format == "json" ? report_json(rep) : report_csv(rep));
    return rep.any_failed() ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulation and quadrature laboratory for SPDEs driven by "
                 "time-independent Levy colored noise"};
    app.require_subcommand(1);

    CommonArgs a_dalang, a_noise, a_sim, a_jp, a_chaos, a_acc;
    std::string jp_tgrid, jp_plist, chaos_orders;
    double chaos_m2 = 1.0, acc_scale = 1.0;
    std::string sim_ts, sim_xs;
    std::size_t trials_flag = 0;
    double box_flag = 0.0, tail_tol_flag = 0.0;

    auto* dalang = app.add_subcommand("dalang", "Dalang-condition check and "
                                                "C_mu quadrature");
    add_common(dalang, a_dalang);

    auto* noise = app.add_subcommand("noise-check", "empirical noise moment "
                                                    "and characteristic-"
                                                    "function checks");
    add_common(noise, a_noise);
    auto* noise_trials = noise->add_option("--trials", trials_flag,
                                           "Monte Carlo trials");

    auto* sim = app.add_subcommand("simulate", "sample the linear solution "
                                               "and compare moments");
    add_common(sim, a_sim);
    auto* sim_t_opt = sim->add_option("--t", sim_ts, "comma list of times");
    auto* sim_x_opt = sim->add_option("--x", sim_xs, "comma list of points");
    auto* sim_trials = sim->add_option("--trials", trials_flag,
                                       "Monte Carlo trials");
    auto* sim_box = sim->add_option("--box", box_flag, "box half-width");

    auto* jp = app.add_subcommand("jp", "J_p(t) norms and bounds sweep");
    add_common(jp, a_jp);
    jp->add_option("--t-grid", jp_tgrid, "lo:hi:log|lin or comma list");
    jp->add_option("--p", jp_plist, "comma list of p values");

    auto* chaos = app.add_subcommand("chaos", "Poisson-chaos term estimates "
                                              "and series certificate");
    add_common(chaos, a_chaos);
    auto* chaos_t_opt = chaos->add_option("--t", sim_ts, "time horizon");
    chaos->add_option("--m2", chaos_m2, "second moment of the jump measure");
    chaos->add_option("--orders", chaos_orders, "comma list of orders");
    auto* chaos_tol = chaos->add_option("--tail-tol", tail_tol_flag,
                                        "series tail tolerance");
    auto* chaos_trials = chaos->add_option("--trials", trials_flag,
                                           "Monte Carlo samples per order");

    auto* acc = app.add_subcommand("acceptance", "run the acceptance suite");
    add_common(acc, a_acc);
    acc->add_option("--trial-scale", acc_scale,
                    "multiplier on Monte Carlo trial counts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dalang->parsed()) return cmd_dalang(resolve_config(a_dalang));
        if (noise->parsed()) {
            RunConfig cfg = resolve_config(a_noise);
            if (noise_trials->count()) cfg.trials = trials_flag;
            return cmd_noise_check(cfg);
        }
        if (sim->parsed()) {
            RunConfig cfg = resolve_config(a_sim);
            if (sim_t_opt->count()) cfg.t_grid = parse_list(sim_ts);
            if (sim_x_opt->count()) cfg.x_grid = parse_list(sim_xs);
            if (sim_trials->count()) cfg.trials = trials_flag;
            if (sim_box->count()) cfg.box_half_width = box_flag;
            return cmd_simulate(cfg);
        }
        if (jp->parsed())
            return cmd_jp(resolve_config(a_jp), jp_tgrid, jp_plist);
        if (chaos->parsed()) {
            RunConfig cfg = resolve_config(a_chaos);
            if (chaos_t_opt->count()) cfg.t_grid = parse_list(sim_ts);
            if (chaos_tol->count()) cfg.tail_tol = tail_tol_flag;
            if (chaos_trials->count()) cfg.trials = trials_flag;
            return cmd_chaos(cfg, chaos_orders, chaos_m2);
        }
        if (acc->parsed()) return cmd_acceptance(resolve_config(a_acc),
                                                 acc_scale);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
