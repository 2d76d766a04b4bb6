#include <bandlim/bandlimit.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bandlim {
namespace {

// (i xi)^n = i^n * xi^n with the quarter turns applied exactly.
Complex i_xi_pow(double xi, int n) {
    double mag = std::pow(xi, n); // signed: (-xi)^n for odd n comes out here
    switch (n & 3) {
        case 0: return Complex(mag, 0.0);
        case 1: return Complex(0.0, mag);
        case 2: return Complex(-mag, 0.0);
        default: return Complex(0.0, -mag);
    }
}

} // namespace

BandlimitedFunction::BandlimitedFunction(Domain domain, Eigen::ArrayXcd coeffs, double sigma,
                                         bool tight)
    : domain_(std::move(domain)), coeffs_(std::move(coeffs)), sigma_(sigma), tight_(tight) {
    if (coeffs_.size() % 2 != 1)
        throw std::invalid_argument("bandlimited: coefficient window must have odd length");
    if (!(sigma_ >= 0.0) || !std::isfinite(sigma_))
        throw std::invalid_argument("bandlimited: sigma must be finite and >= 0");
    if (!coeffs_.real().allFinite() || !coeffs_.imag().allFinite())
        throw std::invalid_argument("bandlimited: coefficients must be finite");
    int k = band_index();
    if (k > band_index_for(domain_, sigma_))
        throw std::invalid_argument("bandlimited: window is wider than the declared type bound");
}

BandlimitedFunction BandlimitedFunction::zero(const Domain& d, double sigma) {
    int k = band_index_for(d, sigma);
    return BandlimitedFunction(d, Eigen::ArrayXcd::Zero(2 * k + 1), sigma);
}

Complex BandlimitedFunction::coeff_at(int m) const {
    int i = m + band_index();
    if (i < 0 || i >= coeffs_.size()) return Complex(0.0, 0.0);
    return coeffs_[i];
}

BandlimitedFunction BandlimitedFunction::tightened() const {
    int k = band_index();
    int top = -1;
    for (int m = -k; m <= k; ++m)
        if (coeff_at(m) != Complex(0.0, 0.0)) top = std::max(top, std::abs(m));
    if (top < 0) return BandlimitedFunction(domain_, Eigen::ArrayXcd::Zero(1), 0.0, true);
    Eigen::ArrayXcd c(2 * top + 1);
    for (int m = -top; m <= top; ++m) c[m + top] = coeff_at(m);
    return BandlimitedFunction(domain_, std::move(c), std::fabs(domain_.freq(top)), true);
}

int band_index_for(const Domain& d, double sigma) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("band_index_for: sigma must be finite and >= 0");
    if (sigma > d.max_sigma() * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "band_index_for: type bound " << sigma << " exceeds what the grid resolves ("
           << d.max_sigma() << "); enlarge n";
        throw std::domain_error(os.str());
    }
    int cap = d.is_periodic() ? d.size() / 2 - 1 : d.size() / 4;
    double raw = d.is_periodic() ? sigma : sigma * d.half_width() / kPi;
    int k = static_cast<int>(std::floor(raw + 1e-9));
    return std::min(k, cap);
}

BandlimitedFunction add(const BandlimitedFunction& a, const BandlimitedFunction& b) {
    if (!(a.domain() == b.domain()))
        throw std::invalid_argument("add: operands live on different domains");
    int k = std::max(a.band_index(), b.band_index());
    Eigen::ArrayXcd c(2 * k + 1);
    for (int m = -k; m <= k; ++m) c[m + k] = a.coeff_at(m) + b.coeff_at(m);
    return BandlimitedFunction(a.domain(), std::move(c), std::max(a.sigma(), b.sigma()));
}

BandlimitedFunction scale(const BandlimitedFunction& a, Complex factor) {
    return BandlimitedFunction(a.domain(), a.coeffs() * factor, a.sigma(), a.tight());
}

GridFunction synthesize(const BandlimitedFunction& b) {
    const Domain& d = b.domain();
    const int n = d.size();
    Eigen::ArrayXcd full = Eigen::ArrayXcd::Zero(n);
    int k = b.band_index();
    for (int m = -k; m <= k; ++m) full[m + n / 2] = b.coeff_at(m);
    return synthesize_full(d, full);
}

BandlimitedFunction analyze(const GridFunction& x, double sigma) {
    const Domain& d = x.domain();
    int k = band_index_for(d, sigma);
    Eigen::ArrayXcd full = analyze_full(x);
    Eigen::ArrayXcd c(2 * k + 1);
    for (int m = -k; m <= k; ++m) c[m + k] = full[m + d.size() / 2];
    return BandlimitedFunction(d, std::move(c), sigma);
}

BandlimitedFunction differentiate(const BandlimitedFunction& b, int n) {
    if (n < 0 || n > 20)
        throw std::invalid_argument("differentiate: order must be in [0, 20]");
    if (n == 0) return b;
    Eigen::ArrayXcd c = b.coeffs();
    int k = b.band_index();
    for (int m = -k; m <= k; ++m) c[m + k] *= i_xi_pow(b.domain().freq(m), n);
    return BandlimitedFunction(b.domain(), std::move(c), b.sigma(), b.tight());
}

namespace {

std::vector<long> tail_sample(long n_max, long dense_cap) {
    std::vector<long> ns;
    long lo = n_max / 2 + 1;
    if (n_max - lo + 1 <= dense_cap) {
        for (long n = lo; n <= n_max; ++n) ns.push_back(n);
    } else {
        ns.push_back(lo);
        for (int i = 1; i < 1023; ++i)
            ns.push_back(lo + static_cast<long>((n_max - lo) * (i / 1023.0)));
        ns.push_back(n_max);
    }
    return ns;
}

// i^n * sgn(xi)^n, the unit factor of (i xi)^n.
Complex unit_phase(double xi, int n) {
    Complex ph;
    switch (n & 3) {
        case 0: ph = Complex(1.0, 0.0); break;
        case 1: ph = Complex(0.0, 1.0); break;
        case 2: ph = Complex(-1.0, 0.0); break;
        default: ph = Complex(0.0, -1.0); break;
    }
    if (xi < 0.0 && (n & 1)) ph = -ph;
    return ph;
}

} // namespace

double estimate_type(const BandlimitedFunction& b, double p, long n_max) {
    if (!(p >= 1.0)) throw std::invalid_argument("estimate_type: p must be >= 1 (or inf)");
    if (n_max < 8) throw std::invalid_argument("estimate_type: n_max must be >= 8");
    const Domain& d = b.domain();
    const int k = b.band_index();

    // Top occupied frequency magnitude; A^n scales its coefficient slowest
    // to die, so it controls the limsup. Everything below is computed with
    // (|xi|/xi_top)^n factored out, which keeps n in the millions finite.
    double xi_top = -1.0;
    for (int m = -k; m <= k; ++m)
        if (b.coeff_at(m) != Complex(0.0, 0.0))
            xi_top = std::max(xi_top, std::fabs(d.freq(m)));
    if (xi_top < 0.0) return 0.0;  // zero vector
    if (xi_top == 0.0) return 0.0; // pure constant: A b = 0

    const bool parseval_ok =
        p == 2.0 && (d.is_periodic() || d.weight().kind() == WeightSpec::Kind::Constant);

    if (parseval_ok) {
        // ||A^n b||_2^2 = period * sum w_xi xi^(2n) over occupied |xi|,
        // so log||A^n b||/n is a closed form per n: O(k) instead of an FFT.
        std::vector<double> w(k + 1, 0.0);
        for (int m = -k; m <= k; ++m) w[std::abs(m)] += std::norm(b.coeff_at(m));
        double best = -kInf;
        for (long n : tail_sample(n_max, 1L << 17)) {
            double acc = 0.0;
            for (int mu = 1; mu <= k; ++mu) {
                if (w[mu] == 0.0) continue;
                double r = std::fabs(d.freq(mu)) / xi_top;
                acc += w[mu] * std::exp(2.0 * n * std::log(r));
            }
            double g = std::log(xi_top) + std::log(d.period() * acc) / (2.0 * n);
            best = std::max(best, g);
        }
        return std::exp(best);
    }

    // General p: evaluate ||A^n b||_p directly per sampled n by synthesizing
    // the scaled coefficients c_m * (i xi_m / xi_top)^n and reading the grid
    // norm; log||A^n b|| = n log(xi_top) + log(that norm).
    double best = -kInf;
    for (long n : tail_sample(n_max, 4096)) {
        Eigen::ArrayXcd c(2 * k + 1);
        int phase_n = static_cast<int>(n & 7); // unit_phase has period 4 in n
        for (int m = -k; m <= k; ++m) {
            double xi = d.freq(m);
            double mag = (xi == 0.0 && n > 0)
                             ? 0.0
                             : std::exp(n * std::log(std::fabs(xi) / xi_top));
            c[m + k] = b.coeff_at(m) * unit_phase(xi, phase_n) * mag;
        }
        double val = norm(synthesize(BandlimitedFunction(d, std::move(c), b.sigma())), p);
        if (val <= 0.0) continue;
        double g = std::log(xi_top) + std::log(val) / n;
        best = std::max(best, g);
    }
    return best == -kInf ? 0.0 : std::exp(best);
}

MultiplierSpec MultiplierSpec::cutoff(double alpha, Transition tr) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("multiplier: alpha must be positive and finite");
    MultiplierSpec m;
    m.alpha = alpha;
    m.stop = 3.0 * alpha;
    m.transition = tr;
    return m;
}

double MultiplierSpec::profile(double xi) const {
    double a = std::fabs(xi);
    if (a <= alpha) return 1.0;
    if (a >= stop) return 0.0;
    double s = (a - alpha) / (stop - alpha);
    if (transition == Transition::RaisedCosine) return 0.5 * (1.0 + std::cos(kPi * s));
    // Smooth bump partition: both exp arguments blow up cleanly to -inf at
    // the edges, so the branch endpoints are exact 1 and 0.
    double f1 = std::exp(-1.0 / (1.0 - s));
    double f0 = std::exp(-1.0 / s);
    return f1 / (f0 + f1);
}

std::string MultiplierSpec::describe() const {
    std::ostringstream os;
    os << "cutoff(alpha=" << alpha << ",stop=" << stop << ","
       << (transition == Transition::RaisedCosine ? "raised_cosine" : "smooth_bump") << ")";
    return os.str();
}

BandlimitedFunction project(const GridFunction& x, const MultiplierSpec& m, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("project: p must be >= 1 (or inf)");
    const Domain& d = x.domain();
    int k = band_index_for(d, m.stop);
    Eigen::ArrayXcd full = analyze_full(x);
    Eigen::ArrayXcd c(2 * k + 1);
    for (int mm = -k; mm <= k; ++mm)
        c[mm + k] = full[mm + d.size() / 2] * m.profile(d.freq(mm));
    return BandlimitedFunction(d, std::move(c), m.stop);
}

double commutation_check(const GridFunction& x, const MultiplierSpec& m) {
    const Domain& d = x.domain();
    double scale = norm(x, 2.0);
    if (scale == 0.0) return 0.0;

    GridFunction route_a = synthesize(differentiate(project(x, m, 2.0), 1));

    Eigen::ArrayXcd full = analyze_full(x);
    const int n = d.size();
    for (int i = 0; i < n; ++i) full[i] *= Complex(0.0, d.freq(i - n / 2));
    GridFunction route_b = synthesize(project(synthesize_full(d, full), m, 2.0));

    GridFunction diff(d, route_a.values() - route_b.values());
    return norm(diff, 2.0) / scale;
}

double multiplier_kernel_l1(const Domain& d, const MultiplierSpec& m) {
    // Discrete kernel kappa_delta = (1/N) sum_m profile(xi_m) e^(2 pi i m delta/N);
    // its weighted l1 mass bounds the induced operator norm on the grid.
    const int n = d.size();
    Eigen::ArrayXcd spec(n);
    for (int i = 0; i < n; ++i) spec[i] = m.profile(d.freq(i - n / 2));
    // Plain periodic synthesis of the kernel, independent of line twiddles:
    // offsets are grid steps, not absolute positions. Feeding profile/N
    // yields kappa_delta = (1/N) sum_m profile(xi_m) e^(2 pi i m delta / N).
    Domain ref = d.is_periodic() ? d : Domain::periodic(n);
    GridFunction kernel = synthesize_full(ref, spec / static_cast<double>(n));
    const Eigen::ArrayXcd& vals = kernel.values();
    double acc = 0.0;
    for (int delta = 0; delta < n; ++delta) {
        int signed_d = delta <= n / 2 ? delta : delta - n;
        double offset = signed_d * d.spacing();
        double wfac = d.is_periodic() ? 1.0 : d.weight()(std::fabs(offset));
        acc += std::abs(vals[delta]) * wfac;
    }
    return acc;
}

void write_profile_csv(const MultiplierSpec& m, const Domain& d, const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw std::runtime_error("write_profile_csv: cannot open " + path);
    std::fprintf(fp, "xi,value\n");
    const int n = d.size();
    for (int i = 0; i < n; ++i) {
        double xi = d.freq(i - n / 2);
        std::fprintf(fp, "%.17g,%.17g\n", xi, m.profile(xi));
    }
    std::fclose(fp);
}

} // namespace bandlim
