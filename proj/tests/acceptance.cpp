// Acceptance battery: one criterion per function, one [PASS]/[FAIL] line each.
// Exit status is the number of failed criteria. argv[1] must point at the
// bandlab executable (used by the determinism criterion).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bandlim/approx.hpp"
#include "bandlim/bandlimit.hpp"
#include "bandlim/domain.hpp"
#include "bandlim/experiments.hpp"
#include "bandlim/function_space.hpp"
#include "bandlim/weights.hpp"

using namespace bandlim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

double uniform_pm1(std::mt19937_64& rng) {
    return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

GridFunction random_band_probe(const Domain& d, double sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int K = band_index_for(d, sigma);
    Eigen::ArrayXcd c(2 * K + 1);
    for (int i = 0; i < 2 * K + 1; ++i) c[i] = Complex(uniform_pm1(rng), uniform_pm1(rng));
    return synthesize(BandlimitedFunction(d, std::move(c), sigma));
}

GridFunction smooth_probe(const Domain& d, double sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int K = band_index_for(d, sigma);
    Eigen::ArrayXcd c(2 * K + 1);
    for (int i = 0; i < 2 * K + 1; ++i) {
        double decay = 1.0 / ((1.0 + std::abs(i - K)) * (1.0 + std::abs(i - K)));
        c[i] = decay * Complex(uniform_pm1(rng), uniform_pm1(rng));
    }
    return synthesize(BandlimitedFunction(d, std::move(c), sigma));
}

// --- C1: eigenfunction derivative ratios are exactly 1 at p = 2 ---
Outcome c1_eigen_ratios() {
    Domain d = Domain::periodic(256);
    double worst = 0.0;
    for (int m = 1; m <= 64; ++m) {
        Eigen::ArrayXcd c = Eigen::ArrayXcd::Zero(2 * m + 1);
        c[2 * m] = Complex(1.0, 0.0);
        BandlimitedFunction b(d, std::move(c), static_cast<double>(m));
        double base = norm(synthesize(b), 2.0);
        BandlimitedFunction cur = b;
        double mpow = 1.0;
        for (int n = 1; n <= 5; ++n) {
            cur = differentiate(cur, 1);
            mpow *= m;
            double ratio = norm(synthesize(cur), 2.0) / (mpow * base);
            worst = std::max(worst, std::abs(ratio - 1.0));
        }
    }
    return {worst <= 1e-10, "max |ratio - 1| = " + fmt(worst)};
}

// --- C2: random band-limited probes never beat the Parseval bound ---
Outcome c2_l2_sharpness() {
    BernsteinConfig cfg; // defaults: N=1024, n<=8, alphas {1..64}, 100 probes, seed 1
    ExperimentReport rep = run_bernstein(cfg);
    double worst = 0.0;
    for (const auto& row : rep.tables.at("ratios").rows) worst = std::max(worst, row[2]);
    bool ok = rep.verdict.pass && worst <= 1.0 + 1e-9;
    return {ok, "max c_meas = " + fmt(worst)};
}

// --- C3: sup-norm derivative ratio of cos(alpha t) is 1 ---
Outcome c3_sup_cosine() {
    Domain d = Domain::periodic(4096);
    double worst = 0.0;
    for (double alpha : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
        GridFunction x = make_grid_function(
            d, [alpha](double t) { return Complex(std::cos(alpha * t), 0.0); });
        BandlimitedFunction b = analyze(x, alpha);
        double ratio =
            norm(synthesize(differentiate(b, 1)), kInf) / (alpha * norm(x, kInf));
        worst = std::max(worst, std::abs(ratio - 1.0));
    }
    return {worst <= 1e-6, "max |ratio - 1| = " + fmt(worst)};
}

// --- C4: lacunary best-approximation errors match the Parseval tail ---
Outcome c4_lacunary_oracle() {
    Domain d = Domain::periodic(1024);
    const int J = 6;
    GridFunction x = make_grid_function(d, [](double t) {
        Complex acc = 0.0;
        for (int j = 0; j <= J; ++j)
            acc += std::pow(4.0, -j) * std::polar(1.0, std::ldexp(1.0, j) * t);
        return acc;
    });
    double scale = norm(x, 2.0);
    double worst = 0.0;
    for (int m = 0; m <= J; ++m) {
        double got = best_approximation(x, std::ldexp(1.0, m), 2.0).value;
        double tail = 0.0;
        for (int j = m + 1; j <= J; ++j) tail += std::pow(4.0, -2 * j);
        double want = std::sqrt(2.0 * kPi * tail);
        double err = want > 0.0 ? std::abs(got - want) / want : got / scale;
        worst = std::max(worst, err);
    }
    return {worst <= 1e-8, "max relative error = " + fmt(worst)};
}

// --- C5: the smoothed cutoff leaves functions inside its passband fixed ---
Outcome c5_projection_fixed_point() {
    Domain d = Domain::periodic(1024);
    double worst = 0.0;
    for (double alpha : {2.0, 8.0, 32.0}) {
        MultiplierSpec ms = MultiplierSpec::cutoff(alpha);
        for (int i = 0; i < 20; ++i) {
            GridFunction x = random_band_probe(d, alpha, 1000 * static_cast<int>(alpha) + i);
            GridFunction px = synthesize(project(x, ms));
            GridFunction diff(d, px.values() - x.values());
            worst = std::max(worst, norm(diff, 2.0) / norm(x, 2.0));
        }
    }
    return {worst <= 1e-10, "max relative residual = " + fmt(worst)};
}

// --- C6: differentiation commutes with the multiplier ---
Outcome c6_commutation() {
    Domain d = Domain::periodic(1024);
    MultiplierSpec ms = MultiplierSpec::cutoff(12.0);
    double worst = 0.0;
    for (int seed = 50; seed < 70; ++seed)
        worst = std::max(worst, commutation_check(smooth_probe(d, 40.0, seed), ms));
    return {worst <= 1e-10, "max commutation gap = " + fmt(worst)};
}

// --- C7: reconstruction harness end to end on the lacunary model ---
Outcome c7_inverse_end_to_end() {
    Domain d = Domain::periodic(1024);
    GridFunction x = make_grid_function(d, [](double t) {
        Complex acc = 0.0;
        for (int j = 0; j <= 8; ++j)
            acc += std::exp2(-1.5 * j) * std::polar(1.0, std::ldexp(1.0, j) * t);
        return acc;
    });
    std::string detail;
    for (int k : {1, 2}) {
        InverseParams prm;
        prm.name = "accept_inverse_k" + std::to_string(k);
        prm.x_label = "lacunary(n=1,gamma=0.5,J=8)";
        prm.n = 1;
        prm.k = k;
        for (int j = 10; j >= 1; --j) prm.t_vals.push_back(std::ldexp(1.0, -j));
        ExperimentReport rep = run_inverse(x, ModulusSpec::power(0.5), prm);
        double slope = rep.fitted_constants.at("ratio_slope");
        bool finite = true;
        for (const auto& row : rep.tables.at("modulus").rows)
            finite = finite && std::isfinite(row[3]);
        detail += (detail.empty() ? "" : "; ") + ("k=" + std::to_string(k)) +
                  " slope=" + fmt(slope);
        if (!(rep.verdict.pass && finite && slope >= -0.05)) return {false, detail};
    }
    return {true, detail};
}

// --- C8: direct estimate ratio spread on |sin t| ---
Outcome c8_jackson_abs_sin() {
    Domain d = Domain::periodic(1024);
    GridFunction x =
        make_grid_function(d, [](double t) { return Complex(std::abs(std::sin(t)), 0.0); });
    JacksonParams prm; // defaults: k=1, p=2, r in {2,...,128}, spread bound 10
    prm.name = "accept_jackson";
    prm.x_label = "abs_sin";
    ExperimentReport rep = run_jackson(x, prm);
    double spread = rep.fitted_constants.at("ratio_spread");
    return {rep.verdict.pass && spread <= 10.0, "ratio spread = " + fmt(spread)};
}

// --- C9: admissibility verdicts across the weight classes ---
Outcome c9_weight_classes() {
    AdmissibilityReport a = check_admissibility(WeightSpec::constant());
    AdmissibilityReport b = check_admissibility(WeightSpec::polynomial(2.0, 3));
    AdmissibilityReport c = check_admissibility(WeightSpec::exp_power(0.5));
    if (!(a.admissible && b.admissible && c.admissible))
        return {false, "a class expected to pass did not"};

    AdmissibilityReport dvg = check_admissibility(WeightSpec::exp_power_forced(1.0));
    if (dvg.admissible || !dvg.integral_divergent)
        return {false, "exp(|t|) should fail via log-integral divergence"};

    WeightSpec series = WeightSpec::power_series_factorial(1.0);
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double t = 20.0 * i / 200.0;
        worst = std::max(worst, std::abs(series(t) - std::exp(t)) / std::exp(t));
    }
    return {worst <= 1e-10, "series vs exp max relative error = " + fmt(worst)};
}

// --- C10: translation norms on the weighted line stay under the weight bound ---
Outcome c10_weighted_group_bound() {
    Domain d = Domain::line(32.0, 4096, WeightSpec::exp_power(0.5));
    double worst_excess = -1.0;
    for (int i = 0; i < 50; ++i) {
        std::mt19937_64 rng(200 + i);
        double w1 = 8.0 * ((rng() >> 11) * 0x1.0p-53);
        double w2 = 8.0 * ((rng() >> 11) * 0x1.0p-53);
        double a1 = uniform_pm1(rng), a2 = uniform_pm1(rng), ph = kPi * uniform_pm1(rng);
        GridFunction x = make_grid_function(d, [=](double t) {
            double env = std::exp(-t * t / 16.0);
            return Complex(env * (a1 * std::cos(w1 * t + ph) + a2 * std::sin(w2 * t)), 0.0);
        });
        if (!check_line_decay(x)) return {false, "probe " + std::to_string(i) + " decays too slowly"};
        double base = norm(x, 2.0);
        for (int s = 0; s <= 8; ++s) {
            double tau = 4.0 * s / 8.0;
            double ratio = norm(shift(x, tau), 2.0) / base;
            worst_excess = std::max(
                worst_excess, ratio / (group_norm_bound(d, tau) * (1.0 + 1e-8)) - 1.0);
        }
    }
    return {worst_excess <= 0.0, "max bound excess = " + fmt(worst_excess)};
}

// --- C11: modulus of continuity basics ---
Outcome c11_modulus_properties() {
    Domain d = Domain::periodic(256);
    GridFunction a =
        make_grid_function(d, [](double t) { return Complex(std::abs(std::sin(t)), 0.0); });
    if (modulus_of_continuity(a, 0.0, 2, 2.0) != 0.0) return {false, "omega(0) != 0"};

    double prev = 0.0;
    for (int j = 8; j >= 0; --j) {
        double w = modulus_of_continuity(a, std::ldexp(0.5, -j), 2, 2.0);
        if (w < prev) return {false, "omega not monotone at t = " + fmt(std::ldexp(0.5, -j))};
        prev = w;
    }

    GridFunction e3 = make_grid_function(d, [](double t) { return std::polar(1.0, 3.0 * t); });
    double scale = norm(e3, 2.0);
    double worst = 0.0;
    for (double t : {0.05, 0.2, 0.6, 1.0}) {
        double want = 2.0 * std::abs(std::sin(1.5 * t)) * scale; // m t <= pi throughout
        double got = modulus_of_continuity(e3, t, 1, 2.0);
        worst = std::max(worst, std::abs(got - want) / want);
    }
    return {worst <= 1e-8, "eigen closed-form max relative error = " + fmt(worst)};
}

// --- C12: the canned battery is byte-deterministic for a fixed seed ---
Outcome c12_determinism(const std::string& cli) {
    if (cli.empty()) return {false, "path to the bandlab executable was not supplied"};
    fs::path base = fs::temp_directory_path() / "bandlab_accept_det";
    fs::remove_all(base);
    fs::create_directories(base);
    fs::path out_a = base / "a", out_b = base / "b";

    for (const fs::path& out : {out_a, out_b}) {
        std::string cmd = "\"" + cli + "\" all --out \"" + out.string() + "\" --seed 7 > \"" +
                          (base / "run.log").string() + "\" 2>&1";
        int rc = std::system(cmd.c_str());
        if (rc != 0) return {false, "battery run exited nonzero (" + std::to_string(rc) + ")"};
    }

    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(out_a)) names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    if (names.empty()) return {false, "battery produced no output files"};
    size_t compared = 0;
    for (const std::string& name : names) {
        std::ifstream fa(out_a / name, std::ios::binary), fb(out_b / name, std::ios::binary);
        if (!fb) return {false, name + " missing from the second run"};
        std::ostringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        if (sa.str() != sb.str()) return {false, name + " differs between runs"};
        ++compared;
    }
    return {true, std::to_string(compared) + " files byte-identical"};
}

int g_failures = 0;

void run(int id, const std::string& label, double time_limit,
         const std::function<Outcome()>& fn) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = fn();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit > 0.0 && secs >= time_limit) {
        out.ok = false;
        out.detail += (out.detail.empty() ? "" : "; ") + std::string("exceeded ") +
                      fmt(time_limit) + "s budget";
    }
    std::printf("[%s] C%d %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, label.c_str(), secs,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.ok) ++g_failures;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    run(1, "eigenfunction derivative ratios exactly 1 at p=2", 5.0, c1_eigen_ratios);
    run(2, "random band-limited probes respect the Parseval bound", 30.0, c2_l2_sharpness);
    run(3, "sup-norm derivative ratio of cos(alpha t) is 1", 0.0, c3_sup_cosine);
    run(4, "lacunary best-approximation matches the Parseval tail", 0.0, c4_lacunary_oracle);
    run(5, "smoothed cutoff fixes functions inside its passband", 0.0, c5_projection_fixed_point);
    run(6, "differentiation commutes with the multiplier", 0.0, c6_commutation);
    run(7, "reconstruction harness passes on the lacunary model", 60.0, c7_inverse_end_to_end);
    run(8, "direct-estimate ratio spread on |sin t| bounded by 10", 0.0, c8_jackson_abs_sin);
    run(9, "weight admissibility verdicts across classes", 0.0, c9_weight_classes);
    run(10, "weighted-line translation norms under the weight bound", 0.0,
        c10_weighted_group_bound);
    run(11, "modulus vanishes at 0, monotone, eigen closed form", 0.0, c11_modulus_properties);
    run(12, "battery reruns with one seed are byte-identical", 0.0,
        [&cli] { return c12_determinism(cli); });

    if (g_failures == 0)
        std::puts("acceptance: all 12 criteria passed");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures;
}
