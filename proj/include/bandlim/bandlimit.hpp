#pragma once

#include <string>

#include <bandlim/function_space.hpp>

namespace bandlim {

// Coefficient window of the generator's eigenbasis: entry i holds the
// coefficient of exp(i * freq(m) * t) with m = i - band_index(). sigma is the
// declared type bound; the window covers every representable frequency of
// magnitude <= sigma. `tight` records whether sigma was recomputed from the
// actual support (constructors set false; tightened() sets it).
class BandlimitedFunction {
public:
    BandlimitedFunction(Domain domain, Eigen::ArrayXcd coeffs, double sigma, bool tight = false);
    static BandlimitedFunction zero(const Domain& d, double sigma);

    const Domain& domain() const { return domain_; }
    const Eigen::ArrayXcd& coeffs() const { return coeffs_; }
    double sigma() const { return sigma_; }
    bool tight() const { return tight_; }
    int band_index() const { return static_cast<int>(coeffs_.size()) / 2; }
    double freq_of(int i) const { return domain_.freq(i - band_index()); }
    // Coefficient at integer frequency index m; zero outside the window.
    Complex coeff_at(int m) const;

    // Same coefficients with sigma recomputed as the largest |freq| actually
    // carrying a nonzero coefficient (0 for the zero vector).
    BandlimitedFunction tightened() const;

private:
    Domain domain_;
    Eigen::ArrayXcd coeffs_;
    double sigma_;
    bool tight_;
};

// Largest coefficient index K representable for a declared type bound:
// support is |m| <= K. Throws std::domain_error when the grid cannot hold the
// band (sigma > max_sigma()).
int band_index_for(const Domain& d, double sigma);

// Sum with the type bound of the larger summand window.
BandlimitedFunction add(const BandlimitedFunction& a, const BandlimitedFunction& b);
BandlimitedFunction scale(const BandlimitedFunction& a, Complex factor);

GridFunction synthesize(const BandlimitedFunction& b);
// Truncates the full spectrum of x to the window of the given type bound.
BandlimitedFunction analyze(const GridFunction& x, double sigma);

// n-th derivative: coefficient-wise multiplication by (i freq)^n. n in [0, 20].
BandlimitedFunction differentiate(const BandlimitedFunction& b, int n = 1);

// Empirical type bound sup_n ||A^n b||_p^(1/n) over n in (n_max/2, n_max],
// evaluated in log space with the top occupied frequency factored out so n in
// the millions stays finite. The unweighted p = 2 cases use a closed form per
// n; other cases synthesize the scaled coefficients per sampled n. At the
// default n_max the result is within ~1e-6 of the top frequency for any
// vector whose top coefficient is not absurdly small.
double estimate_type(const BandlimitedFunction& b, double p = 2.0, long n_max = 1L << 24);

// Low-pass multiplier: identically 1 on [-alpha, alpha], identically 0
// outside (-stop, stop), with a smooth monotone transition in between.
// stop = 3 * alpha.
struct MultiplierSpec {
    enum class Transition { RaisedCosine, SmoothBump };

    double alpha = 1.0;
    double stop = 3.0;
    Transition transition = Transition::RaisedCosine;

    static MultiplierSpec cutoff(double alpha, Transition tr = Transition::RaisedCosine);
    double profile(double xi) const;
    std::string describe() const;
};

// Applies the multiplier to the spectrum of x and returns the resulting
// vector of type stop = 3 alpha. Frequencies inside [-alpha, alpha] pass with
// an exact unit factor, so vectors already inside that band reproduce. On the
// line domain the profile is evaluated at the representable grid frequencies,
// which effectively snaps alpha to the grid spacing pi/L.
BandlimitedFunction project(const GridFunction& x, const MultiplierSpec& m, double p = 2.0);

// Relative gap between d/dt of the projection and the projection of d/dt,
// measured in the 2-norm against ||x||_2. Exact commutation would give 0.
double commutation_check(const GridFunction& x, const MultiplierSpec& m);

// Weighted l1 mass of the discrete convolution kernel realizing the
// multiplier on this grid; a grid proxy for the projection operator norm.
double multiplier_kernel_l1(const Domain& d, const MultiplierSpec& m);

// One "xi,value" row per representable frequency.
void write_profile_csv(const MultiplierSpec& m, const Domain& d, const std::string& path);

} // namespace bandlim
