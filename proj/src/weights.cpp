#include <bandlim/weights.hpp>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bandlim {
namespace {

constexpr double kTermFloor = 1e-18;   // per-term cutoff relative to the running sum
constexpr int kMaxFactors = 1000000;   // hard cap on product/series terms

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

double log_add_exp(double a, double b) {
    if (a < b) std::swap(a, b);
    if (b == -std::numeric_limits<double>::infinity()) return a;
    return a + std::log1p(std::exp(b - a));
}

// log of sum_n x^n / (n!)^a, summed in log space so x ~ 1000 stays finite.
double log_series_factorial(double a, double x) {
    if (x <= 0.0) return 0.0;
    const double lx = std::log(x);
    double acc = 0.0; // n = 0 term
    for (int n = 1; n <= kMaxFactors; ++n) {
        double ln_term = n * lx - a * std::lgamma(n + 1.0);
        acc = log_add_exp(acc, ln_term);
        if (ln_term < acc + std::log(kTermFloor) && n > x) break;
    }
    return acc;
}

// log of prod_k sqrt(1 + t^2/t_k^2). Geometric zeros give geometrically
// decaying factor logs, so plain truncation at kTermFloor is cheap. Power
// zeros t_k = c k^q decay only like k^(-2q); there the exact sum stops once
// a factor log drops below 1e-3 and the remainder is closed analytically:
// log1p(y) = y - y^2/2 + y^3/3 + O(y^4) summed with Euler-Maclaurin tails
// of k^(-2q), k^(-4q), k^(-6q). The truncation error is below 1e-13 of the
// tail itself, far inside every tolerance used downstream.
double log_entire_product(double c, double q, bool geometric, double t) {
    double x = std::fabs(t);
    if (x == 0.0) return 0.0;
    double lg = 0.0;
    if (geometric) {
        double tk = c * q; // k = 1 zero at c*rho
        for (int k = 1; k <= kMaxFactors; ++k) {
            double r = x / tk;
            double term = 0.5 * std::log1p(r * r);
            lg += term;
            if (term < kTermFloor) break;
            tk *= q;
        }
        return lg;
    }
    const double a = (x / c) * (x / c);
    int k = 1;
    for (; k <= kMaxFactors; ++k) {
        double y = a * std::pow(static_cast<double>(k), -2.0 * q);
        double term = 0.5 * std::log1p(y);
        lg += term;
        if (term < kTermFloor) return lg;
        if (y < 1e-3 && k >= 12) break;
    }
    auto zeta_tail = [](double s, double m) {
        // sum_{j >= m} j^-s for s > 1 and m >= 13
        return std::pow(m, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(m, -s) +
               s * std::pow(m, -s - 1.0) / 12.0 -
               s * (s + 1.0) * (s + 2.0) * std::pow(m, -s - 3.0) / 720.0 +
               s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * std::pow(m, -s - 5.0) /
                   30240.0;
    };
    double m = static_cast<double>(k) + 1.0;
    lg += 0.5 * a * zeta_tail(2.0 * q, m) - 0.25 * a * a * zeta_tail(4.0 * q, m) +
          (a * a * a / 6.0) * zeta_tail(6.0 * q, m);
    return lg;
}

} // namespace

WeightSpec WeightSpec::constant() {
    WeightSpec w;
    w.kind_ = Kind::Constant;
    w.describe_ = "constant";
    return w;
}

WeightSpec WeightSpec::polynomial(double M, int k) {
    if (!(M >= 1.0)) throw std::invalid_argument("weights: polynomial needs M >= 1");
    if (k < 0) throw std::invalid_argument("weights: polynomial needs k >= 0");
    WeightSpec w;
    w.kind_ = Kind::Polynomial;
    w.par_a_ = M;
    w.par_b_ = static_cast<double>(k);
    w.describe_ = "polynomial(M=" + fmt(M) + ",k=" + fmt(k) + ")";
    return w;
}

WeightSpec WeightSpec::exp_power(double beta) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("weights: exp_power needs beta in (0,1); "
                                    "use exp_power_forced to build the boundary case");
    WeightSpec w;
    w.kind_ = Kind::ExpPower;
    w.par_a_ = beta;
    w.describe_ = "exp_power(beta=" + fmt(beta) + ")";
    return w;
}

WeightSpec WeightSpec::exp_power_forced(double beta) {
    if (!(beta > 0.0 && beta <= 1.0))
        throw std::invalid_argument("weights: exp_power_forced needs beta in (0,1]");
    WeightSpec w;
    w.kind_ = Kind::ExpPower;
    w.par_a_ = beta;
    w.describe_ = "exp_power(beta=" + fmt(beta) + ",forced)";
    return w;
}

WeightSpec WeightSpec::power_series_factorial(double a) {
    if (!(a >= 1.0)) throw std::invalid_argument("weights: power_series_factorial needs a >= 1");
    WeightSpec w;
    w.kind_ = Kind::PowerSeries;
    w.par_a_ = a;
    w.describe_ = "power_series_factorial(a=" + fmt(a) + ")";
    return w;
}

WeightSpec WeightSpec::entire_modulus_power_zeros(double c, double q, double C) {
    if (!(c > 0.0)) throw std::invalid_argument("weights: entire modulus needs c > 0");
    if (!(q > 1.0)) throw std::invalid_argument("weights: power zeros need q > 1 so the product converges");
    if (!(C >= 1.0)) throw std::invalid_argument("weights: entire modulus needs C >= 1");
    WeightSpec w;
    w.kind_ = Kind::EntireModulus;
    w.par_a_ = c;
    w.par_b_ = q;
    w.par_c_ = C;
    w.geometric_ = false;
    w.describe_ = "entire_modulus(zeros=c*k^q,c=" + fmt(c) + ",q=" + fmt(q) + ",C=" + fmt(C) + ")";
    return w;
}

WeightSpec WeightSpec::entire_modulus_geometric_zeros(double c, double rho, double C) {
    if (!(c > 0.0)) throw std::invalid_argument("weights: entire modulus needs c > 0");
    if (!(rho > 1.0)) throw std::invalid_argument("weights: geometric zeros need rho > 1");
    if (!(C >= 1.0)) throw std::invalid_argument("weights: entire modulus needs C >= 1");
    WeightSpec w;
    w.kind_ = Kind::EntireModulus;
    w.par_a_ = c;
    w.par_b_ = rho;
    w.par_c_ = C;
    w.geometric_ = true;
    w.describe_ = "entire_modulus(zeros=c*rho^k,c=" + fmt(c) + ",rho=" + fmt(rho) + ",C=" + fmt(C) + ")";
    return w;
}

double WeightSpec::log_eval(double t) const {
    double x = std::fabs(t);
    switch (kind_) {
        case Kind::Constant:
            return 0.0;
        case Kind::Polynomial:
            return std::log(par_a_) + par_b_ * std::log1p(x);
        case Kind::ExpPower:
            return std::pow(x, par_a_);
        case Kind::PowerSeries:
            return log_series_factorial(par_a_, x);
        case Kind::EntireModulus:
            return std::log(par_c_) + log_entire_product(par_a_, par_b_, geometric_, x);
    }
    return 0.0;
}

double WeightSpec::operator()(double t) const {
    return std::exp(log_eval(t));
}

AdmissibilityReport check_admissibility(const WeightSpec& w, double t_max, int n_samples) {
    if (!(t_max >= 10.0)) throw std::invalid_argument("check_admissibility: t_max must be >= 10");
    if (n_samples < 100) throw std::invalid_argument("check_admissibility: n_samples must be >= 100");

    AdmissibilityReport rep;
    const double tol = 1e-12;

    // Pointwise conditions on a uniform grid, in log space.
    rep.ge_one = rep.even = rep.monotone = true;
    double prev = w.log_eval(0.0);
    if (prev < -tol) rep.ge_one = false;
    for (int i = 1; i <= n_samples; ++i) {
        double t = t_max * i / n_samples;
        double lv = w.log_eval(t);
        double scale = std::max(1.0, std::fabs(lv));
        if (lv < -tol) rep.ge_one = false;
        if (std::fabs(w.log_eval(-t) - lv) > tol * scale) rep.even = false;
        if (lv < prev - tol * scale) rep.monotone = false;
        prev = lv;
    }

    // Submultiplicativity on a deterministic pair lattice. In log space the
    // multiplicative slack (1 + 1e-12) becomes an additive 1e-12.
    const int lat = 64;
    rep.submultiplicative = true;
    rep.max_submult_excess = 0.0;
    for (int i = 0; i <= lat; ++i) {
        for (int j = i; j <= lat; ++j) {
            double s = t_max * i / lat;
            double t = t_max * j / lat;
            double lhs = w.log_eval(s + t);
            double rhs = w.log_eval(s) + w.log_eval(t);
            double slack = tol * (1.0 + std::fabs(rhs));
            if (lhs > rhs + slack) rep.submultiplicative = false;
            double excess = std::expm1(std::min(lhs - rhs, 700.0));
            if (excess > rep.max_submult_excess) rep.max_submult_excess = excess;
        }
    }

    // Partial values of the log integral at T = t_max/8, /4, /2, t_max,
    // by composite Simpson on [0, T] with n_samples panels.
    auto integral_to = [&](double T) {
        int n = n_samples;
        if (n % 2 != 0) ++n;
        double h = T / n;
        auto f = [&](double t) { return w.log_eval(t) / (1.0 + t * t); };
        double acc = f(0.0) + f(T);
        for (int i = 1; i < n; ++i) acc += f(i * h) * ((i % 2 != 0) ? 4.0 : 2.0);
        return acc * h / 3.0;
    };
    for (double frac : {0.125, 0.25, 0.5, 1.0})
        rep.integral_partials.emplace_back(frac * t_max, integral_to(frac * t_max));

    // Equivalent series form: partial sums of log mu(k)/k^2.
    {
        double acc = 0.0;
        int next = 0;
        int kmax = static_cast<int>(t_max);
        for (int k = 1; k <= kmax; ++k) {
            acc += w.log_eval(static_cast<double>(k)) / (static_cast<double>(k) * k);
            while (next < 4 && k == std::max(1, static_cast<int>(kmax * std::pow(0.5, 3 - next)))) {
                rep.series_partials.emplace_back(static_cast<double>(k), acc);
                ++next;
            }
        }
        while (next < 4) {
            rep.series_partials.emplace_back(static_cast<double>(kmax), acc);
            ++next;
        }
    }

    // Doubling heuristic: relative growth above 5% past t_max/4 means the
    // tail is still feeding the integral, i.e. divergence at this horizon.
    auto diverges = [](const std::vector<std::pair<double, double>>& partials) {
        bool div = false;
        for (size_t i = 2; i < partials.size(); ++i) {
            double lo = partials[i - 1].second;
            double hi = partials[i].second;
            double rel = (hi - lo) / std::max(std::fabs(hi), 1e-300);
            if (rel > 0.05) div = true;
        }
        return div;
    };
    rep.integral_divergent = diverges(rep.integral_partials);
    rep.series_divergent = diverges(rep.series_partials);
    rep.forms_agree = (rep.integral_divergent == rep.series_divergent);

    rep.admissible = rep.ge_one && rep.even && rep.monotone && rep.submultiplicative &&
                     !rep.integral_divergent;
    return rep;
}

} // namespace bandlim
