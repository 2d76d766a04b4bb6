#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bandlim {

// Weight function mu(t) used by the weighted norms on the line. Every
// constructible instance is even, >= 1 and nondecreasing for t >= 0 by
// construction; whether it is fully admissible (submultiplicative and with a
// convergent log integral) is decided empirically by check_admissibility().
//
// Evaluation is done in log space so that large arguments stay meaningful:
// log_eval(t) never overflows for the supported classes, while operator()
// honestly returns +inf once exp() leaves double range.
class WeightSpec {
public:
    enum class Kind { Constant, Polynomial, ExpPower, PowerSeries, EntireModulus };

    static WeightSpec constant();
    // M * (1 + |t|)^k with M >= 1, k >= 0.
    static WeightSpec polynomial(double M, int k);
    // exp(|t|^beta) with beta in (0, 1).
    static WeightSpec exp_power(double beta);
    // Same formula with beta allowed up to 1. Exists so that divergence
    // demonstrations can construct exp(|t|) deliberately; beta = 1 fails the
    // admissibility check and that is the point.
    static WeightSpec exp_power_forced(double beta);
    // sum_n |t|^n / (n!)^a with a >= 1; a = 1 reproduces exp(|t|).
    static WeightSpec power_series_factorial(double a);
    // C * prod_k sqrt(1 + t^2 / t_k^2) with zeros t_k = c * k^q, q > 1.
    // C >= 1 provides the slack that makes the product submultiplicative;
    // C = 2 is enough for t_k = k^2 (measured excess is about 1.21).
    static WeightSpec entire_modulus_power_zeros(double c, double q, double C);
    // Same with geometrically spaced zeros t_k = c * rho^k, rho > 1.
    static WeightSpec entire_modulus_geometric_zeros(double c, double rho, double C);

    double operator()(double t) const;
    double log_eval(double t) const;

    Kind kind() const { return kind_; }
    const std::string& describe() const { return describe_; }
    bool operator==(const WeightSpec& o) const { return describe_ == o.describe_; }

private:
    WeightSpec() = default;
    Kind kind_ = Kind::Constant;
    // Class parameters; meaning depends on kind_ (see the factory that set them).
    double par_a_ = 0.0;
    double par_b_ = 0.0;
    double par_c_ = 0.0;
    bool geometric_ = false;
    std::string describe_;
};

struct AdmissibilityReport {
    bool ge_one = false;            // mu >= 1 on the sample grid
    bool even = false;              // mu(-t) == mu(t) on the sample grid
    bool monotone = false;          // nondecreasing for t >= 0
    bool submultiplicative = false; // mu(s+t) <= mu(s)mu(t) on the pair lattice
    double max_submult_excess = 0.0; // worst mu(s+t)/(mu(s)mu(t)) - 1 seen
    // Partial values of int_0^T log mu(t)/(1+t^2) dt at T = t_max/8, /4, /2, t_max.
    std::vector<std::pair<double, double>> integral_partials;
    // Partial values of sum_{k<=K} log mu(k)/k^2 at K = t_max/8, /4, /2, t_max.
    std::vector<std::pair<double, double>> series_partials;
    bool integral_divergent = false;
    bool series_divergent = false;
    bool forms_agree = false;       // the two divergence verdicts coincide
    bool admissible = false;        // pointwise conditions hold and the integral converges
};

// Empirical admissibility check on [0, t_max] with n_samples quadrature
// panels. The log-integral convergence is decided by a doubling heuristic:
// if the partial integral still grows by more than 5% (relative) when T
// doubles past t_max/4, the weight is flagged divergent. The equivalent
// series form is computed independently and compared. Growth like exp(|t|)
// is flagged reliably; weights just below the boundary (exp(|t|^beta) with
// beta close to 1) may need a larger t_max to be classified as convergent.
AdmissibilityReport check_admissibility(const WeightSpec& w, double t_max = 1000.0,
                                        int n_samples = 2000);

} // namespace bandlim
