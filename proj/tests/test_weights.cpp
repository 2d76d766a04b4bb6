#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bandlim/weights.hpp"

using namespace bandlim;

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace

TEST_CASE("weight evaluation: pinned values") {
    CHECK(WeightSpec::constant()(7.3) == 1.0);
    CHECK(WeightSpec::exp_power(0.5)(0.0) == 1.0);
    CHECK(rel_err(WeightSpec::polynomial(1.0, 2)(3.0), 16.0) < 1e-12);
    CHECK(rel_err(WeightSpec::exp_power(0.5)(4.0), std::exp(2.0)) < 1e-12);
    CHECK(rel_err(WeightSpec::polynomial(2.0, 3)(1.5), 2.0 * 2.5 * 2.5 * 2.5) < 1e-12);
}

TEST_CASE("weight evaluation: even in t") {
    std::vector<WeightSpec> ws = {
        WeightSpec::constant(),
        WeightSpec::polynomial(2.0, 3),
        WeightSpec::exp_power(0.5),
        WeightSpec::power_series_factorial(2.0),
        WeightSpec::entire_modulus_power_zeros(2.0, 2.0, 2.0),
        WeightSpec::entire_modulus_geometric_zeros(1.0, 2.0, 1.0),
    };
    for (const auto& w : ws)
        for (double t : {0.1, 1.0, 3.7, 25.0}) CHECK(w(-t) == w(t));
}

TEST_CASE("weight evaluation: at least 1 and nondecreasing") {
    std::vector<WeightSpec> ws = {
        WeightSpec::polynomial(1.0, 1),
        WeightSpec::exp_power(0.3),
        WeightSpec::power_series_factorial(1.5),
        WeightSpec::entire_modulus_power_zeros(1.0, 2.0, 2.0),
    };
    for (const auto& w : ws) {
        double prev = 0.0;
        for (int i = 0; i <= 200; ++i) {
            double v = w(i * 0.25);
            CHECK(v >= 1.0);
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("invalid weight parameters are rejected") {
    CHECK_THROWS_AS(WeightSpec::exp_power(1.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::exp_power(0.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::exp_power(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::exp_power_forced(1.5), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::polynomial(0.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::polynomial(1.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::power_series_factorial(0.5), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::entire_modulus_power_zeros(1.0, 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::entire_modulus_power_zeros(-1.0, 2.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::entire_modulus_geometric_zeros(1.0, 1.0, 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::entire_modulus_geometric_zeros(1.0, 2.0, 0.5),
                    std::invalid_argument);
    CHECK(WeightSpec::exp_power_forced(1.0)(2.0) == doctest::Approx(std::exp(2.0)));
}

TEST_CASE("factorial power series reproduces exp on [0,20]") {
    WeightSpec w = WeightSpec::power_series_factorial(1.0);
    for (int i = 0; i <= 40; ++i) {
        double t = 0.5 * i;
        CHECK(rel_err(w(t), std::exp(t)) < 1e-10);
    }
}

TEST_CASE("power series with a=2 matches a direct partial sum") {
    WeightSpec w = WeightSpec::power_series_factorial(2.0);
    for (double t : {0.5, 4.0, 12.0}) {
        // sum_n t^n / (n!)^2, summed directly until the terms die out
        double sum = 0.0, term = 1.0;
        for (int n = 1; n <= 400; ++n) {
            sum += term;
            term *= t / (static_cast<double>(n) * n);
            if (term < 1e-22 * sum) break;
        }
        CHECK(rel_err(w(t), sum) < 1e-12);
    }
}

TEST_CASE("entire modulus product matches a direct partial product") {
    WeightSpec wp = WeightSpec::entire_modulus_power_zeros(2.0, 2.0, 2.0); // zeros 2k^2
    for (double t : {0.5, 3.0, 20.0}) {
        double logp = std::log(2.0);
        for (long k = 1; k <= 2000000; ++k) {
            double tk = 2.0 * static_cast<double>(k) * k;
            double r = t / tk;
            double f = 0.5 * std::log1p(r * r);
            logp += f;
            if (f < 1e-18) break;
        }
        CHECK(rel_err(wp(t), std::exp(logp)) < 1e-10);
    }

    WeightSpec wg = WeightSpec::entire_modulus_geometric_zeros(1.0, 2.0, 1.0); // zeros 2^k
    for (double t : {0.5, 5.0, 100.0}) {
        double logp = 0.0;
        for (long k = 1; k <= 10000; ++k) {
            double tk = std::ldexp(1.0, static_cast<int>(k));
            double r = t / tk;
            double f = 0.5 * std::log1p(r * r);
            logp += f;
            if (f < 1e-18 && tk > t) break;
        }
        CHECK(rel_err(wg(t), std::exp(logp)) < 1e-10);
    }
}

TEST_CASE("submultiplicativity lattice across all classes") {
    std::vector<WeightSpec> ws = {
        WeightSpec::constant(),
        WeightSpec::polynomial(2.0, 3),
        WeightSpec::exp_power(0.7),
        WeightSpec::power_series_factorial(1.5),
        WeightSpec::entire_modulus_power_zeros(1.0, 2.0, 2.0),
        WeightSpec::entire_modulus_geometric_zeros(1.0, 2.0, 2.0),
    };
    for (const auto& w : ws) {
        for (int i = 0; i <= 20; ++i) {
            for (int j = 0; j <= 20; ++j) {
                double s = 2.0 * i, t = 2.0 * j;
                CHECK(w(s + t) <= w(s) * w(t) * (1.0 + 1e-12));
            }
        }
    }
}

TEST_CASE("log_eval agrees with the log of eval where eval is finite") {
    WeightSpec w = WeightSpec::exp_power(0.5);
    for (double t : {0.0, 1.0, 9.0, 100.0})
        CHECK(std::abs(w.log_eval(t) - std::log(w(t))) < 1e-12);
    // log_eval stays finite far past the overflow point of eval
    WeightSpec big = WeightSpec::exp_power_forced(1.0);
    CHECK(std::isinf(big(1e4)));
    CHECK(big.log_eval(1e4) == doctest::Approx(1e4));
}

TEST_CASE("admissibility: constant, polynomial and exp classes pass") {
    for (const auto& w : {WeightSpec::constant(), WeightSpec::polynomial(2.0, 3),
                          WeightSpec::exp_power(0.5)}) {
        AdmissibilityReport rep = check_admissibility(w);
        CHECK(rep.ge_one);
        CHECK(rep.even);
        CHECK(rep.monotone);
        CHECK(rep.submultiplicative);
        CHECK_FALSE(rep.integral_divergent);
        CHECK(rep.admissible);
    }
}

TEST_CASE("admissibility: forced exp(|t|) fails the log-integral condition") {
    AdmissibilityReport rep = check_admissibility(WeightSpec::exp_power_forced(1.0));
    CHECK(rep.ge_one);
    CHECK(rep.even);
    CHECK(rep.monotone);
    CHECK(rep.integral_divergent);
    CHECK(rep.series_divergent);
    CHECK(rep.forms_agree);
    CHECK_FALSE(rep.admissible);
    // partial integrals of t/(1+t^2) keep growing like log T
    REQUIRE(rep.integral_partials.size() >= 2);
    double last = rep.integral_partials.back().second;
    double prev = rep.integral_partials[rep.integral_partials.size() - 2].second;
    CHECK(last > prev * 1.05);
}

TEST_CASE("admissibility: integral and series verdicts agree for every class") {
    std::vector<WeightSpec> ws = {
        WeightSpec::constant(),           WeightSpec::polynomial(3.0, 2),
        WeightSpec::exp_power(0.5),       WeightSpec::exp_power_forced(1.0),
        WeightSpec::power_series_factorial(2.0),
        WeightSpec::entire_modulus_power_zeros(1.0, 2.0, 2.0),
    };
    for (const auto& w : ws) CHECK(check_admissibility(w).forms_agree);
}

TEST_CASE("admissibility: parameter validation") {
    CHECK_THROWS_AS(check_admissibility(WeightSpec::constant(), 5.0, 2000),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_admissibility(WeightSpec::constant(), 1000.0, 50),
                    std::invalid_argument);
}

TEST_CASE("weight descriptors and equality") {
    CHECK(WeightSpec::constant() == WeightSpec::constant());
    CHECK_FALSE(WeightSpec::constant() == WeightSpec::exp_power(0.5));
    CHECK(WeightSpec::polynomial(2.0, 3).describe().find("polynomial") != std::string::npos);
}
