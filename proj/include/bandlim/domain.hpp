#pragma once

#include <complex>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include <bandlim/weights.hpp>

namespace bandlim {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Sample grid for one of the two concrete settings: the 2*pi circle sampled
// at t_j = 2*pi*j/N, or a symmetric truncation [-L, L) of the weighted line
// sampled at t_j = -L + 2*L*j/N. N is a power of two (>= 64) so every
// transform below is a plain radix-2 FFT.
//
// Frequencies are indexed by integers m in [-N/2, N/2): on the circle the
// frequency of m is m itself; on the line it is pi*m/L, the natural grid for
// a 2L-periodic extension.
class Domain {
public:
    enum class Kind { Periodic, Line };

    static Domain periodic(int n);
    static Domain line(double half_width, int n, WeightSpec weight);

    Kind kind() const { return kind_; }
    bool is_periodic() const { return kind_ == Kind::Periodic; }
    int size() const { return n_; }
    double half_width() const;
    const WeightSpec& weight() const { return weight_; }

    double period() const { return is_periodic() ? 2.0 * kPi : 2.0 * half_width_; }
    double spacing() const { return period() / n_; }
    double point(int j) const;
    Eigen::ArrayXd points() const;
    // Physical frequency of integer index m.
    double freq(int m) const { return is_periodic() ? static_cast<double>(m) : kPi * m / half_width_; }
    // Largest type bound whose coefficient window the grid can represent
    // without aliasing concerns: N/2 - 1 on the circle, pi*N/(4L) on the line
    // (line windows are kept to half the representable band so products like
    // Gram matrices stay inside the spectrum).
    double max_sigma() const;
    const Eigen::ArrayXd& weight_samples() const { return weight_samples_; }

    bool operator==(const Domain& o) const;
    std::string describe() const;

private:
    Domain() = default;
    Kind kind_ = Kind::Periodic;
    int n_ = 0;
    double half_width_ = 0.0;
    WeightSpec weight_ = WeightSpec::constant();
    Eigen::ArrayXd weight_samples_;
};

// Complex samples over a Domain grid. Construction validates the length and
// rejects non-finite entries.
class GridFunction {
public:
    GridFunction(Domain domain, Eigen::ArrayXcd values);
    const Domain& domain() const { return domain_; }
    const Eigen::ArrayXcd& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }

private:
    Domain domain_;
    Eigen::ArrayXcd values_;
};

GridFunction make_grid_function(const Domain& d, const std::function<Complex(double)>& f);
GridFunction zero_function(const Domain& d);

// Centered discrete spectrum: entry i holds the coefficient of
// exp(i * freq(m) * t) with m = i - N/2. analyze_full and synthesize_full are
// mutually inverse up to FFT roundoff.
Eigen::ArrayXcd analyze_full(const GridFunction& x);
GridFunction synthesize_full(const Domain& d, const Eigen::ArrayXcd& spectrum);

// Plain text io: a commented header describing the grid, then one
// "t,re,im" row per sample with %.17g fields (lossless round trip).
void write_csv(const GridFunction& x, const std::string& path);
GridFunction read_csv(const Domain& d, const std::string& path);

} // namespace bandlim
