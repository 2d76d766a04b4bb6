#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <random>

#include "bandlim/function_space.hpp"

using namespace bandlim;

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

GridFunction random_function(const Domain& d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1p-53 * 2.0 - 1.0; };
    Eigen::ArrayXcd v(d.size());
    for (int i = 0; i < d.size(); ++i) v[i] = Complex(u(), u());
    return GridFunction(d, v);
}

double max_abs_diff(const GridFunction& a, const GridFunction& b) {
    return (a.values() - b.values()).abs().maxCoeff();
}

} // namespace

TEST_CASE("norm: pinned values") {
    Domain d = Domain::periodic(1024);
    GridFunction s = make_grid_function(d, [](double t) { return Complex(std::sin(t), 0.0); });
    CHECK(rel_err(norm(s, 2.0), std::sqrt(kPi)) < 1e-10);

    GridFunction z = zero_function(d);
    for (double p : {1.0, 2.0, kInf}) CHECK(norm(z, p) == 0.0);

    Domain line = Domain::line(1.0, 64, WeightSpec::constant());
    GridFunction one = make_grid_function(line, [](double) { return Complex(1.0, 0.0); });
    CHECK(rel_err(norm(one, 1.0), 2.0) < 1e-12);

    CHECK(norm(s, kInf) == doctest::Approx(1.0).epsilon(1e-5)); // grid max of |sin|
    CHECK_THROWS_AS(norm(s, 0.5), std::invalid_argument);
}

TEST_CASE("norm: weighted line includes the weight") {
    Domain line = Domain::line(2.0, 128, WeightSpec::polynomial(1.0, 1));
    GridFunction one = make_grid_function(line, [](double) { return Complex(1.0, 0.0); });
    // int_{-2}^{2} (1+|t|) dt = 8; rectangle rule on the uniform grid is exact
    // up to the edge sample convention, so allow the one-sample bias.
    CHECK(norm(one, 1.0) == doctest::Approx(8.0).epsilon(0.05));
    // sup norm picks up the largest weight on the grid
    CHECK(norm(one, kInf) == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("Parseval consistency on the circle") {
    Domain d = Domain::periodic(256);
    GridFunction x = random_function(d, 11);
    double n2 = norm(x, 2.0);
    Eigen::ArrayXcd c = analyze_full(x);
    double parseval = std::sqrt(2.0 * kPi * c.abs2().sum());
    CHECK(rel_err(n2, parseval) < 1e-10);
}

TEST_CASE("shift: identity, eigenfunction phase, group law") {
    Domain d = Domain::periodic(256);
    GridFunction x = random_function(d, 5);

    GridFunction same = shift(x, 0.0);
    CHECK(max_abs_diff(same, x) == 0.0); // U(0) leaves the samples untouched

    GridFunction e4 = make_grid_function(d, [](double t) { return std::polar(1.0, 4.0 * t); });
    GridFunction shifted = shift(e4, 0.37);
    Complex phase = std::polar(1.0, 4.0 * 0.37);
    double worst = 0.0;
    for (int i = 0; i < d.size(); ++i)
        worst = std::max(worst, std::abs(shifted.values()[i] - phase * e4.values()[i]));
    CHECK(worst < 1e-12);

    GridFunction roundtrip = shift(shift(x, 0.3), -0.3);
    CHECK(max_abs_diff(roundtrip, x) < 1e-12 * norm(x, kInf));

    GridFunction ab = shift(shift(x, 0.2), 0.35);
    GridFunction once = shift(x, 0.55);
    CHECK(max_abs_diff(ab, once) < 1e-12 * norm(x, kInf));
}

TEST_CASE("shift: line range guard") {
    Domain line = Domain::line(8.0, 128, WeightSpec::constant());
    GridFunction x = make_grid_function(line, [](double t) { return Complex(std::exp(-t * t), 0.0); });
    CHECK_NOTHROW(shift(x, 2.0));  // L/4 exactly
    CHECK_THROWS_AS(shift(x, 2.1), std::domain_error);
    CHECK_THROWS_AS(shift(x, -2.1), std::domain_error);
}

TEST_CASE("finite differences: order 0, h = 0, eigenfunction factor") {
    Domain d = Domain::periodic(128);
    GridFunction x = random_function(d, 7);

    CHECK(max_abs_diff(finite_difference(x, 0.3, 0), x) == 0.0);

    GridFunction zero = finite_difference(x, 0.0, 1);
    CHECK(norm(zero, kInf) < 1e-13 * norm(x, kInf));

    GridFunction e1 = make_grid_function(d, [](double t) { return std::polar(1.0, t); });
    double h = 0.3;
    Complex factor = std::pow(std::polar(1.0, h) - Complex(1.0, 0.0), 2);
    GridFunction d2 = finite_difference(e1, h, 2);
    double worst = 0.0;
    for (int i = 0; i < d.size(); ++i)
        worst = std::max(worst, std::abs(d2.values()[i] - factor * e1.values()[i]));
    CHECK(worst < 1e-12);

    CHECK_THROWS_AS(finite_difference(x, 0.1, 9), std::invalid_argument);
    CHECK_THROWS_AS(finite_difference(x, 0.1, -1), std::invalid_argument);
}

TEST_CASE("finite differences: linearity and recursion") {
    Domain d = Domain::periodic(128);
    GridFunction x = random_function(d, 8);
    GridFunction y = random_function(d, 9);
    Complex a(0.7, -0.2), b(-1.3, 0.4);

    GridFunction combo(d, a * x.values() + b * y.values());
    GridFunction lhs = finite_difference(combo, 0.21, 3);
    GridFunction dx = finite_difference(x, 0.21, 3);
    GridFunction dy = finite_difference(y, 0.21, 3);
    double worst = (lhs.values() - (a * dx.values() + b * dy.values())).abs().maxCoeff();
    CHECK(worst < 1e-12 * (norm(x, kInf) + norm(y, kInf)));

    // Delta_h^3 x = Delta_h^2 (U(h)x - x)
    GridFunction step(d, shift(x, 0.21).values() - x.values());
    GridFunction rhs = finite_difference(step, 0.21, 2);
    CHECK(max_abs_diff(dx, rhs) < 1e-12 * norm(x, kInf));
}

TEST_CASE("finite differences: alternating binomial sum cross-check") {
    Domain d = Domain::periodic(128);
    GridFunction x = random_function(d, 10);
    const int k = 3;
    const double h = 0.17;
    const double binom[4] = {1, 3, 3, 1};
    Eigen::ArrayXcd acc = Eigen::ArrayXcd::Zero(d.size());
    for (int j = 0; j <= k; ++j) {
        double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * binom[j] * shift(x, j * h).values();
    }
    GridFunction direct = finite_difference(x, h, k);
    CHECK((direct.values() - acc).abs().maxCoeff() < 1e-11 * norm(x, kInf));
}

TEST_CASE("modulus of continuity: zero at t=0 and eigenfunction closed form") {
    Domain d = Domain::periodic(256);
    GridFunction e3 = make_grid_function(d, [](double t) { return std::polar(1.0, 3.0 * t); });
    CHECK(modulus_of_continuity(e3, 0.0, 1, 2.0) == 0.0);

    double n2 = norm(e3, 2.0);
    for (double t : {0.05, 0.2, 0.6, kPi / 3.0}) {
        double want = 2.0 * std::abs(std::sin(3.0 * t / 2.0)) * n2;
        CHECK(rel_err(modulus_of_continuity(e3, t, 1, 2.0), want) < 1e-8);
    }
}

TEST_CASE("modulus of continuity: monotone along dyadic scales") {
    Domain d = Domain::periodic(256);
    GridFunction x = make_grid_function(d, [](double t) { return Complex(std::abs(std::sin(t)), 0.0); });
    double prev = 0.0;
    for (int j = 8; j >= 0; --j) {
        double w = modulus_of_continuity(x, std::ldexp(0.5, -j), 2, 2.0);
        CHECK(w >= prev);
        prev = w;
    }
}

TEST_CASE("modulus of continuity: crude difference-expansion bound") {
    Domain d = Domain::periodic(128);
    GridFunction x = random_function(d, 12);
    for (int k : {1, 3}) {
        double bound = std::pow(group_norm_bound(d, 0.4) + 1.0, k) * norm(x, 2.0) * (1 + 1e-8);
        CHECK(modulus_of_continuity(x, 0.4, k, 2.0) <= bound);
    }
    CHECK_THROWS_AS(modulus_of_continuity(x, 0.1, 1, 2.0, 8), std::invalid_argument);
}

TEST_CASE("group norm bound") {
    Domain d = Domain::periodic(64);
    CHECK(group_norm_bound(d, 0.0) == 1.0);
    CHECK(group_norm_bound(d, 17.5) == 1.0);

    Domain l1 = Domain::line(8.0, 128, WeightSpec::constant());
    CHECK(group_norm_bound(l1, 5.0) == 1.0);

    Domain l2 = Domain::line(8.0, 128, WeightSpec::exp_power(0.5));
    CHECK(rel_err(group_norm_bound(l2, 4.0), std::exp(2.0)) < 1e-12);
}

TEST_CASE("translation on the weighted line respects the weight bound") {
    Domain line = Domain::line(32.0, 1024, WeightSpec::polynomial(1.0, 2));
    for (std::uint64_t seed : {21, 22, 23, 24, 25}) {
        std::mt19937_64 rng(seed);
        auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1p-53 * 2.0 - 1.0; };
        double a1 = u(), a2 = u(), a3 = u();
        GridFunction x = make_grid_function(line, [&](double t) {
            double env = std::exp(-0.5 * (t / 4.0) * (t / 4.0));
            return Complex(env * (a1 + a2 * std::cos(t) + a3 * std::sin(2.0 * t)), 0.0);
        });
        REQUIRE(check_line_decay(x));
        double nx = norm(x, 2.0);
        for (double tau : {1.0, 2.0, 4.0}) {
            double ratio = norm(shift(x, tau), 2.0) / nx;
            CHECK(ratio <= group_norm_bound(line, tau) * (1 + 1e-8));
        }
    }
}

TEST_CASE("line decay validator") {
    Domain line = Domain::line(32.0, 512, WeightSpec::exp_power(0.5));
    GridFunction g = make_grid_function(line, [](double t) { return Complex(std::exp(-0.5 * (t / 3.0) * (t / 3.0)), 0.0); });
    CHECK(check_line_decay(g));
    GridFunction one = make_grid_function(line, [](double) { return Complex(1.0, 0.0); });
    CHECK_FALSE(check_line_decay(one));
}

TEST_CASE("grid function CSV round trip") {
    namespace fs = std::filesystem;
    Domain d = Domain::periodic(128);
    GridFunction x = random_function(d, 31);
    fs::path p = fs::temp_directory_path() / "bandlim_roundtrip.csv";
    write_csv(x, p.string());
    GridFunction back = read_csv(d, p.string());
    CHECK(max_abs_diff(back, x) == 0.0); // %.17g fields are lossless

    Domain other = Domain::periodic(64);
    CHECK_THROWS(read_csv(other, p.string()));
    fs::remove(p);
}

TEST_CASE("domain construction guards") {
    CHECK_THROWS_AS(Domain::periodic(100), std::invalid_argument); // not a power of two
    CHECK_THROWS_AS(Domain::periodic(32), std::invalid_argument);  // too small
    CHECK_THROWS_AS(Domain::line(0.0, 128, WeightSpec::constant()), std::invalid_argument);
    Domain d = Domain::periodic(64);
    CHECK(d.spacing() == doctest::Approx(2.0 * kPi / 64));
    Domain l = Domain::line(4.0, 64, WeightSpec::constant());
    CHECK(l.point(0) == doctest::Approx(-4.0));
    CHECK(l.freq(1) == doctest::Approx(kPi / 4.0));
}
