#include "bandlim/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "bandlim/approx.hpp"
#include "bandlim/bandlimit.hpp"
#include "bandlim/config.hpp"
#include "bandlim/domain.hpp"
#include "bandlim/experiments.hpp"
#include "bandlim/function_space.hpp"
#include "bandlim/weights.hpp"

namespace bandlim {

namespace {

double parse_p(const Config& cfg, const std::string& key, double def) {
    std::string s = cfg.get_string_or(key, "");
    if (s.empty()) return def;
    if (s == "inf" || s == "Inf" || s == "INF") return kInf;
    return cfg.get_double(key);
}

WeightSpec build_weight(const Config& cfg, const std::string& prefix) {
    std::string cls = cfg.get_string_or(prefix + "class", "constant");
    if (cls == "constant") return WeightSpec::constant();
    if (cls == "polynomial") {
        double M = cfg.get_double_or(prefix + "M", 1.0);
        long k = cfg.get_int_or(prefix + "k", 1);
        return WeightSpec::polynomial(M, static_cast<int>(k));
    }
    if (cls == "exp_power") {
        double beta = cfg.get_double(prefix + "beta");
        if (cfg.get_bool_or(prefix + "force", false)) return WeightSpec::exp_power_forced(beta);
        return WeightSpec::exp_power(beta);
    }
    if (cls == "power_series") {
        return WeightSpec::power_series_factorial(cfg.get_double(prefix + "a"));
    }
    if (cls == "entire_modulus") {
        std::string zeros = cfg.get_string_or(prefix + "zeros", "power");
        double c = cfg.get_double_or(prefix + "c", 1.0);
        double C = cfg.get_double_or(prefix + "C", 2.0);
        if (zeros == "power")
            return WeightSpec::entire_modulus_power_zeros(c, cfg.get_double(prefix + "q"), C);
        if (zeros == "geometric")
            return WeightSpec::entire_modulus_geometric_zeros(c, cfg.get_double(prefix + "rho"), C);
        throw ConfigError("unknown zero layout '" + zeros + "' (power|geometric)",
                          cfg.line_of(prefix + "zeros"), prefix + "zeros");
    }
    throw ConfigError("unknown weight class '" + cls +
                          "' (constant|polynomial|exp_power|power_series|entire_modulus)",
                      cfg.line_of(prefix + "class"), prefix + "class");
}

Domain build_domain(const Config& cfg) {
    std::string kind = cfg.get_string_or("domain.kind", "periodic");
    long n = cfg.get_int_or("domain.n", 1024);
    if (kind == "periodic") return Domain::periodic(static_cast<int>(n));
    if (kind == "line") {
        double half_width = cfg.get_double("domain.half_width");
        return Domain::line(half_width, static_cast<int>(n), build_weight(cfg, "weight."));
    }
    throw ConfigError("unknown domain kind '" + kind + "' (periodic|line)",
                      cfg.line_of("domain.kind"), "domain.kind");
}

std::pair<GridFunction, std::string> build_function(const Config& cfg, const Domain& d) {
    std::string builder = cfg.get_string("function.builder");
    if (builder == "eigenfunction") {
        long m = cfg.get_int("function.m");
        double xi = d.freq(static_cast<int>(m));
        GridFunction x = make_grid_function(
            d, [xi](double t) { return std::polar(1.0, xi * t); });
        return {std::move(x), "eigen(m=" + std::to_string(m) + ")"};
    }
    if (builder == "lacunary") {
        long n = cfg.get_int_or("function.n", 1);
        double gamma = cfg.get_double_or("function.gamma", 0.5);
        long J = cfg.get_int_or("function.J", 8);
        if (n < 1 || J < 1 || J > 24 || !(gamma > 0))
            throw ConfigError("lacunary needs n >= 1, gamma > 0, 1 <= J <= 24", 0, "function");
        GridFunction x = make_grid_function(d, [&](double t) {
            Complex acc = 0;
            for (long j = 0; j <= J; ++j)
                acc += std::exp2(-static_cast<double>(j) * (static_cast<double>(n) + gamma)) *
                       std::polar(1.0, std::ldexp(1.0, static_cast<int>(j)) * t);
            return acc;
        });
        char lbl[96];
        std::snprintf(lbl, sizeof(lbl), "lacunary(n=%ld,gamma=%g,J=%ld)", n, gamma, J);
        return {std::move(x), lbl};
    }
    if (builder == "abs_sin") {
        GridFunction x = make_grid_function(
            d, [](double t) { return Complex(std::abs(std::sin(t)), 0.0); });
        return {std::move(x), "abs_sin"};
    }
    if (builder == "gaussian") {
        double s = cfg.get_double_or("function.s", 1.0);
        if (!(s > 0)) throw ConfigError("gaussian scale must be positive", 0, "function.s");
        GridFunction x = make_grid_function(
            d, [s](double t) { return Complex(std::exp(-0.5 * (t / s) * (t / s)), 0.0); });
        return {std::move(x), "gaussian(s=" + cfg.get_string_or("function.s", "1") + ")"};
    }
    if (builder == "csv") {
        std::string path = cfg.get_string("function.path");
        return {read_csv(d, path), std::filesystem::path(path).filename().string()};
    }
    throw ConfigError("unknown function builder '" + builder +
                          "' (eigenfunction|lacunary|abs_sin|gaussian|csv)",
                      cfg.line_of("function.builder"), "function.builder");
}

ModulusSpec build_modulus(const Config& cfg) {
    std::string form = cfg.get_string_or("modulus.form", "power");
    if (form == "power") return ModulusSpec::power(cfg.get_double("modulus.gamma"));
    if (form == "log_power")
        return ModulusSpec::log_power(cfg.get_double("modulus.gamma"),
                                      cfg.get_double_or("modulus.delta", 0.0));
    if (form == "tabulated")
        return ModulusSpec::tabulated(cfg.get_list("modulus.t_vals"), cfg.get_list("modulus.w_vals"));
    throw ConfigError("unknown modulus form '" + form + "' (power|log_power|tabulated)",
                      cfg.line_of("modulus.form"), "modulus.form");
}

std::uint64_t resolve_seed(const Config& cfg, bool flag_set, std::uint64_t flag_seed) {
    if (flag_set) return flag_seed;
    return static_cast<std::uint64_t>(cfg.get_int_or("seed", 1));
}

std::string resolve_out_dir(const Config* cfg, const std::string& flag_out) {
    if (!flag_out.empty()) return flag_out;
    if (const char* env = std::getenv("BANDLAB_OUT"); env && *env) return env;
    if (cfg && cfg->has("output.dir")) return cfg->get_string("output.dir");
    return "./out";
}

ExperimentReport run_from_config(const std::string& kind, const Config& cfg, bool flag_seed_set,
                                 std::uint64_t flag_seed) {
    if (cfg.has("experiment") && cfg.get_string("experiment") != kind)
        throw ConfigError("config declares experiment '" + cfg.get_string("experiment") +
                              "' but the '" + kind + "' subcommand was invoked",
                          cfg.line_of("experiment"), "experiment");

    if (kind == "bernstein") {
        BernsteinConfig c;
        c.domain = build_domain(cfg);
        c.name = cfg.get_string_or("name", "bernstein");
        c.n_max = static_cast<int>(cfg.get_int_or("params.n_max", c.n_max));
        if (cfg.has("params.alphas")) c.alphas = cfg.get_list("params.alphas");
        c.p = parse_p(cfg, "params.p", c.p);
        c.probes = static_cast<int>(cfg.get_int_or("params.probes", c.probes));
        c.seed = resolve_seed(cfg, flag_seed_set, flag_seed);
        c.cosine_probes = cfg.get_bool_or("params.cosine_probes", false);
        return run_bernstein(c);
    }
    if (kind == "bernstein_delta") {
        BernsteinDeltaConfig c;
        c.domain = build_domain(cfg);
        c.name = cfg.get_string_or("name", "bernstein_delta");
        c.k = static_cast<int>(cfg.get_int_or("params.k", c.k));
        if (cfg.has("params.alphas")) c.alphas = cfg.get_list("params.alphas");
        if (cfg.has("params.h_vals")) c.h_vals = cfg.get_list("params.h_vals");
        c.p = parse_p(cfg, "params.p", c.p);
        c.probes = static_cast<int>(cfg.get_int_or("params.probes", c.probes));
        c.seed = resolve_seed(cfg, flag_seed_set, flag_seed);
        return run_bernstein_delta(c);
    }
    if (kind == "jackson") {
        Domain d = build_domain(cfg);
        auto [x, label] = build_function(cfg, d);
        JacksonParams prm;
        prm.name = cfg.get_string_or("name", "jackson");
        prm.x_label = label;
        prm.k = static_cast<int>(cfg.get_int_or("params.k", prm.k));
        if (cfg.has("params.r_vals")) prm.r_vals = cfg.get_list("params.r_vals");
        prm.p = parse_p(cfg, "params.p", prm.p);
        prm.sobolev_m = static_cast<int>(cfg.get_int_or("params.sobolev_m", 0));
        prm.maxmin_bound = cfg.get_double_or("params.maxmin_bound", prm.maxmin_bound);
        return run_jackson(x, prm);
    }
    if (kind == "inverse") {
        Domain d = build_domain(cfg);
        auto [x, label] = build_function(cfg, d);
        ModulusSpec omega = build_modulus(cfg);
        InverseParams prm;
        prm.name = cfg.get_string_or("name", "inverse");
        prm.x_label = label;
        prm.n = static_cast<int>(cfg.get_int_or("params.n", prm.n));
        prm.k = static_cast<int>(cfg.get_int_or("params.k", prm.k));
        std::string m = cfg.get_string_or("params.m", "auto");
        prm.m_claim = (m == "auto") ? 0.0 : cfg.get_double("params.m");
        prm.t_vals = cfg.get_list("params.t_vals");
        prm.p = parse_p(cfg, "params.p", prm.p);
        prm.j_max = static_cast<int>(cfg.get_int_or("params.j_max", -1));
        return run_inverse(x, omega, prm);
    }
    if (kind == "weights_check") {
        WeightSpec w = build_weight(cfg, "weight.");
        WeightsParams prm;
        prm.name = cfg.get_string_or("name", "weights_check");
        prm.t_max = cfg.get_double_or("params.t_max", prm.t_max);
        prm.n_samples = static_cast<int>(cfg.get_int_or("params.n_samples", prm.n_samples));
        prm.expect_admissible = cfg.get_bool_or("params.expect_admissible", true);
        return run_weights_check(w, prm);
    }
    throw ConfigError("unknown experiment kind '" + kind + "'", 0, "experiment");
}

void print_verdict(const ExperimentReport& rep, const std::string& out_dir) {
    std::cout << (rep.verdict.pass ? "[PASS] " : "[FAIL] ") << rep.name << " (" << rep.kind
              << ")\n";
    for (const auto& line : rep.verdict.details) std::cout << "    " << line << "\n";
    std::cout << "    report: " << out_dir << "/" << rep.name << ".report.json" << std::endl;
}

// The canned battery behind the `all` subcommand. Order is execution and
// summary order; every entry must be deterministic for a fixed seed.
struct BatteryItem {
    std::string name;
    std::string kind;
    std::function<ExperimentReport(std::uint64_t)> run;
};

std::vector<BatteryItem> battery() {
    std::vector<BatteryItem> items;
    auto add_weight = [&](std::string name, WeightSpec w, bool expect) {
        items.push_back({name, "weights_check", [name, w, expect](std::uint64_t) {
                             WeightsParams prm;
                             prm.name = name;
                             prm.expect_admissible = expect;
                             return run_weights_check(w, prm);
                         }});
    };
    add_weight("weights_constant", WeightSpec::constant(), true);
    add_weight("weights_polynomial_M2_k3", WeightSpec::polynomial(2.0, 3), true);
    add_weight("weights_exp_beta_half", WeightSpec::exp_power(0.5), true);
    add_weight("weights_exp_beta_one", WeightSpec::exp_power_forced(1.0), false);
    add_weight("weights_series_a2", WeightSpec::power_series_factorial(2.0), true);

    items.push_back({"bernstein_p2", "bernstein", [](std::uint64_t seed) {
                         BernsteinConfig c;
                         c.name = "bernstein_p2";
                         c.seed = seed;
                         return run_bernstein(c);
                     }});
    items.push_back({"bernstein_sup_cos", "bernstein", [](std::uint64_t seed) {
                         BernsteinConfig c;
                         c.domain = Domain::periodic(4096);
                         c.name = "bernstein_sup_cos";
                         c.n_max = 5;
                         c.p = kInf;
                         c.cosine_probes = true;
                         c.seed = seed;
                         return run_bernstein(c);
                     }});
    items.push_back({"bernstein_delta_k2", "bernstein_delta", [](std::uint64_t seed) {
                         BernsteinDeltaConfig c;
                         c.name = "bernstein_delta_k2";
                         c.seed = seed;
                         return run_bernstein_delta(c);
                     }});
    items.push_back({"jackson_abs_sin", "jackson", [](std::uint64_t) {
                         Domain d = Domain::periodic(1024);
                         GridFunction x = make_grid_function(
                             d, [](double t) { return Complex(std::abs(std::sin(t)), 0.0); });
                         JacksonParams prm;
                         prm.name = "jackson_abs_sin";
                         prm.x_label = "abs_sin";
                         return run_jackson(x, prm);
                     }});
    auto add_inverse = [&](std::string name, int k) {
        items.push_back({name, "inverse", [name, k](std::uint64_t) {
                             Domain d = Domain::periodic(1024);
                             GridFunction x = make_grid_function(d, [](double t) {
                                 Complex acc = 0;
                                 for (int j = 0; j <= 8; ++j)
                                     acc += std::exp2(-1.5 * j) *
                                            std::polar(1.0, std::ldexp(1.0, j) * t);
                                 return acc;
                             });
                             InverseParams prm;
                             prm.name = name;
                             prm.x_label = "lacunary(n=1,gamma=0.5,J=8)";
                             prm.n = 1;
                             prm.k = k;
                             prm.t_vals = parse_number_list("dyadic:1:10");
                             return run_inverse(x, ModulusSpec::power(0.5), prm);
                         }});
    };
    add_inverse("inverse_lacunary_k1", 1);
    add_inverse("inverse_lacunary_k2", 2);
    return items;
}

int run_all(const std::string& out_dir, bool flag_seed_set, std::uint64_t flag_seed) {
    std::uint64_t seed = flag_seed_set ? flag_seed : 1;
    nlohmann::ordered_json summary;
    summary["schema"] = "bandlab-summary-v1";
    summary["seed"] = seed;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    bool all_pass = true;
    for (const auto& item : battery()) {
        nlohmann::ordered_json entry;
        entry["name"] = item.name;
        entry["kind"] = item.kind;
        try {
            ExperimentReport rep = item.run(seed);
            write_report(rep, out_dir);
            print_verdict(rep, out_dir);
            entry["pass"] = rep.verdict.pass;
            if (!rep.verdict.pass) all_pass = false;
        } catch (const std::exception& e) {
            std::cout << "[FAIL] " << item.name << " (" << item.kind << ")\n    error: " << e.what()
                      << std::endl;
            entry["pass"] = false;
            entry["error"] = e.what();
            all_pass = false;
        }
        list.push_back(entry);
    }
    summary["all_pass"] = all_pass;
    summary["experiments"] = list;
    std::filesystem::create_directories(out_dir);
    std::ofstream out(std::filesystem::path(out_dir) / "summary.json", std::ios::binary);
    out << summary.dump(2) << "\n";
    std::cout << (all_pass ? "all experiments passed" : "some experiments FAILED") << std::endl;
    return all_pass ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"numerical laboratory for approximation by band-limited functions"};
    app.require_subcommand(1);

    std::string config_path;
    std::string flag_out;
    std::uint64_t flag_seed = 0;

    static const char* kKinds[] = {"bernstein", "bernstein_delta", "jackson", "inverse",
                                   "weights_check"};
    static const char* kDescs[] = {
        "derivative-norm growth against type and order",
        "finite-difference norms against (h alpha)^k",
        "direct estimate: best approximation against the modulus",
        "smoothness reconstruction from approximation rates",
        "weight admissibility battery",
    };
    std::map<std::string, CLI::App*> subs;
    for (size_t i = 0; i < 5; ++i) {
        CLI::App* sub = app.add_subcommand(kKinds[i], kDescs[i]);
        sub->add_option("--config", config_path, "experiment config (dot-key text or JSON)")
            ->required();
        sub->add_option("--out", flag_out, "output directory (overrides env and config)");
        sub->add_option("--seed", flag_seed, "RNG seed override");
        subs[kKinds[i]] = sub;
    }
    CLI::App* all_sub = app.add_subcommand("all", "run the canned experiment battery");
    all_sub->add_option("--out", flag_out, "output directory");
    all_sub->add_option("--seed", flag_seed, "RNG seed for the randomized entries");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (all_sub->parsed())
            return run_all(resolve_out_dir(nullptr, flag_out), all_sub->count("--seed") > 0,
                           flag_seed);
        for (const auto& [kind, sub] : subs) {
            if (!sub->parsed()) continue;
            Config cfg = Config::from_file(config_path);
            ExperimentReport rep =
                run_from_config(kind, cfg, sub->count("--seed") > 0, flag_seed);
            for (const auto& [k, v] : cfg.entries()) rep.inputs["config." + k] = v;
            std::string out_dir = resolve_out_dir(&cfg, flag_out);
            write_report(rep, out_dir);
            print_verdict(rep, out_dir);
            return rep.verdict.pass ? 0 : 1;
        }
        std::cerr << "no subcommand selected" << std::endl;
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error";
        if (e.line > 0) std::cerr << " at line " << e.line;
        if (!e.field.empty()) std::cerr << " (field " << e.field << ")";
        std::cerr << ": " << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << std::endl;
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid configuration: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << std::endl;
        return 1;
    }
}

} // namespace bandlim
