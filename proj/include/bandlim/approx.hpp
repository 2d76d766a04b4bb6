#pragma once

#include <string>
#include <vector>

#include <bandlim/bandlimit.hpp>

namespace bandlim {

// Majorant profile omega(u) on [0, 1]: nonnegative, nondecreasing, omega(0)=0.
// Power and log-power forms are closed-form; tabulated profiles interpolate
// linearly between knots and extend by constants on both sides. A tabulated
// profile whose first knot sits at u > 0 with a positive value therefore has
// a non-integrable omega(u)/u near 0, which omega_integral_transform reports
// as a divergence error.
class ModulusSpec {
public:
    static ModulusSpec power(double gamma);                   // u^gamma
    static ModulusSpec log_power(double gamma, double delta); // u^gamma * (1 - log u)^delta
    static ModulusSpec tabulated(std::vector<double> ts, std::vector<double> ws);

    double operator()(double u) const;
    // Measured sup of omega(2t)/omega(t) over a log-spaced sample of (0, 1/2].
    double doubling_constant() const;
    const std::vector<double>& knots() const { return ts_; }
    std::string describe() const;

private:
    ModulusSpec() = default;
    enum class Form { Power, LogPower, Tabulated } form_ = Form::Power;
    double gamma_ = 0.0, delta_ = 0.0;
    std::vector<double> ts_, ws_;
};

// Integral of omega(u)/u over (0, t], t in [0, 1], by geometric panels with
// Gauss-Legendre nodes; panels split at tabulated knots. Throws
// std::runtime_error when the panel sequence does not decay (omega(u)/u not
// integrable at 0).
double omega_integral_transform(const ModulusSpec& omega, double t);

// t^k * int_t^1 omega(u)/u^(k+1) du + int_0^t omega(u)/u du, the right-hand
// side shape of the smoothness estimate. t in (0, 1/2], k in [1, 8].
double inverse_theorem_rhs(const ModulusSpec& omega, double t, int k);

enum class ApproxMethod { Auto, ExactL2, LeastSquaresWeighted, Subgradient };

struct BestApprox {
    BandlimitedFunction approximant;
    double value = 0.0;        // achieved distance ||x - approximant||_p
    double lower_bound = 0.0;  // certified lower bound on the true distance
    double upper_bound = 0.0;  // certified upper bound (a feasible candidate)
    bool converged = true;
    int iterations = 0;
    std::string method;
};

// Distance from x to the band of type r in the p-norm.
//   - ExactL2: unweighted 2-norms; coefficient truncation is the exact
//     minimizer and value = tail mass (Parseval).
//   - LeastSquaresWeighted: p = 2 with weights; normal equations with a
//     Toeplitz Gram matrix assembled from the spectrum of mu^2.
//   - Subgradient: any p; projected subgradient with step c/sqrt(i),
//     best-iterate tracking, at most 2000 iterations. Bracketed by a
//     duality-style lower bound (circle) and the best feasible candidate.
//   - Auto picks ExactL2/LeastSquaresWeighted when p == 2, else Subgradient.
BestApprox best_approximation(const GridFunction& x, double r, double p,
                              ApproxMethod method = ApproxMethod::Auto);

struct ApproxCurve {
    std::vector<double> r;
    std::vector<double> value;
};

ApproxCurve approximation_curve(const GridFunction& x, const std::vector<double>& r_vals,
                                double p, ApproxMethod method = ApproxMethod::Auto);

} // namespace bandlim
