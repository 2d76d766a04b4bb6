#include <bandlim/domain.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace bandlim {
namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void validate_size(int n) {
    if (!is_power_of_two(n) || n < 64) {
        std::ostringstream os;
        os << "domain: grid size must be a power of two >= 64, got " << n;
        if (n > 64) {
            int lo = 64;
            while (lo * 2 <= n) lo *= 2;
            os << " (nearest valid sizes: " << lo << " and " << lo * 2 << ")";
        }
        throw std::invalid_argument(os.str());
    }
}

Eigen::VectorXcd fft_forward(const Eigen::VectorXcd& v) {
    static thread_local Eigen::FFT<double> fft;
    Eigen::VectorXcd out;
    fft.fwd(out, v);
    return out;
}

Eigen::VectorXcd fft_inverse(const Eigen::VectorXcd& v) {
    static thread_local Eigen::FFT<double> fft;
    Eigen::VectorXcd out;
    fft.inv(out, v);
    return out;
}

} // namespace

Domain Domain::periodic(int n) {
    validate_size(n);
    Domain d;
    d.kind_ = Kind::Periodic;
    d.n_ = n;
    d.weight_samples_ = Eigen::ArrayXd::Ones(n);
    return d;
}

Domain Domain::line(double half_width, int n, WeightSpec weight) {
    validate_size(n);
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw std::invalid_argument("domain: line half width must be positive and finite");
    Domain d;
    d.kind_ = Kind::Line;
    d.n_ = n;
    d.half_width_ = half_width;
    d.weight_ = std::move(weight);
    d.weight_samples_.resize(n);
    for (int j = 0; j < n; ++j) d.weight_samples_[j] = d.weight_(d.point(j));
    if (!d.weight_samples_.allFinite())
        throw std::invalid_argument("domain: weight overflows on this grid; shrink half_width");
    return d;
}

double Domain::half_width() const {
    if (is_periodic()) throw std::domain_error("domain: half_width is a line-domain property");
    return half_width_;
}

double Domain::point(int j) const {
    if (is_periodic()) return 2.0 * kPi * j / n_;
    return -half_width_ + 2.0 * half_width_ * j / n_;
}

Eigen::ArrayXd Domain::points() const {
    Eigen::ArrayXd p(n_);
    for (int j = 0; j < n_; ++j) p[j] = point(j);
    return p;
}

double Domain::max_sigma() const {
    if (is_periodic()) return n_ / 2 - 1;
    return kPi * n_ / (4.0 * half_width_);
}

bool Domain::operator==(const Domain& o) const {
    return kind_ == o.kind_ && n_ == o.n_ && half_width_ == o.half_width_ &&
           weight_ == o.weight_;
}

std::string Domain::describe() const {
    std::ostringstream os;
    if (is_periodic()) {
        os << "periodic n=" << n_;
    } else {
        os << "line L=" << half_width_ << " n=" << n_ << " weight=" << weight_.describe();
    }
    return os.str();
}

GridFunction::GridFunction(Domain domain, Eigen::ArrayXcd values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_.size())
        throw std::invalid_argument("grid function: sample count does not match the domain");
    if (!values_.real().allFinite() || !values_.imag().allFinite())
        throw std::invalid_argument("grid function: samples must be finite");
}

GridFunction make_grid_function(const Domain& d, const std::function<Complex(double)>& f) {
    Eigen::ArrayXcd v(d.size());
    for (int j = 0; j < d.size(); ++j) v[j] = f(d.point(j));
    return GridFunction(d, std::move(v));
}

GridFunction zero_function(const Domain& d) {
    return GridFunction(d, Eigen::ArrayXcd::Zero(d.size()));
}

// With t_j = -L + 2Lj/N and xi_m = pi m / L, exp(i xi_m t_j) =
// (-1)^m exp(2 pi i m j / N), so the line transforms are the periodic ones
// with an extra (-1)^m twiddle on odd rows.
Eigen::ArrayXcd analyze_full(const GridFunction& x) {
    const int n = x.size();
    const bool line = !x.domain().is_periodic();
    Eigen::VectorXcd f = fft_forward(x.values().matrix());
    Eigen::ArrayXcd c(n);
    for (int i = 0; i < n; ++i) {
        int m = i - n / 2;
        int k = m < 0 ? m + n : m;
        Complex v = f[k] / static_cast<double>(n);
        if (line && (m & 1)) v = -v;
        c[i] = v;
    }
    return c;
}

GridFunction synthesize_full(const Domain& d, const Eigen::ArrayXcd& spectrum) {
    const int n = d.size();
    if (spectrum.size() != n)
        throw std::invalid_argument("synthesize_full: spectrum length does not match the domain");
    const bool line = !d.is_periodic();
    Eigen::VectorXcd s(n);
    for (int i = 0; i < n; ++i) {
        int m = i - n / 2;
        int k = m < 0 ? m + n : m;
        Complex v = spectrum[i] * static_cast<double>(n);
        if (line && (m & 1)) v = -v;
        s[k] = v;
    }
    return GridFunction(d, fft_inverse(s).array());
}

void write_csv(const GridFunction& x, const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw std::runtime_error("write_csv: cannot open " + path);
    std::fprintf(fp, "# %s\n", x.domain().describe().c_str());
    std::fprintf(fp, "t,re,im\n");
    for (int j = 0; j < x.size(); ++j) {
        std::fprintf(fp, "%.17g,%.17g,%.17g\n", x.domain().point(j), x.values()[j].real(),
                     x.values()[j].imag());
    }
    std::fclose(fp);
}

GridFunction read_csv(const Domain& d, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    Eigen::ArrayXcd v(d.size());
    std::string linebuf;
    int row = 0;
    while (std::getline(in, linebuf)) {
        if (linebuf.empty() || linebuf[0] == '#' || linebuf.rfind("t,", 0) == 0) continue;
        if (row >= d.size()) throw std::runtime_error("read_csv: more rows than grid points");
        double t = 0, re = 0, im = 0;
        if (std::sscanf(linebuf.c_str(), "%lg,%lg,%lg", &t, &re, &im) != 3)
            throw std::runtime_error("read_csv: malformed row '" + linebuf + "'");
        double want = d.point(row);
        if (std::fabs(t - want) > 1e-9 * std::max(1.0, std::fabs(want)))
            throw std::runtime_error("read_csv: sample abscissa does not match the grid");
        v[row++] = Complex(re, im);
    }
    if (row != d.size()) throw std::runtime_error("read_csv: fewer rows than grid points");
    return GridFunction(d, std::move(v));
}

} // namespace bandlim
