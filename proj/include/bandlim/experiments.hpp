#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <bandlim/approx.hpp>

namespace bandlim {

struct ReportTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct Verdict {
    bool pass = true;
    std::vector<std::string> details; // one line per failed assertion
};

// Everything a harness run produces: the resolved inputs it ran with, numeric
// tables, fitted constants, free-form notes, and a machine-checkable verdict.
// Serialization is canonical (sorted keys, fixed float formatting), so equal
// runs produce byte-identical files.
struct ExperimentReport {
    std::string kind;
    std::string name;
    std::map<std::string, std::string> inputs;
    std::map<std::string, ReportTable> tables;
    std::map<std::string, double> fitted_constants;
    std::vector<std::string> notes;
    Verdict verdict;
};

std::string report_to_json(const ExperimentReport& rep);
// Writes <name>.report.json plus one <name>.<table>.csv per table.
void write_report(const ExperimentReport& rep, const std::string& out_dir);

// Derivative-norm growth: c_meas(n, alpha) = max over probes of
// ||A^n x||_p / (alpha^n ||x||_p) for band-limited probes of type <= alpha.
// Verdict: every c_meas finite and no upward trend of c_meas in alpha
// (log-log slope <= 0.05 per n).
struct BernsteinConfig {
    Domain domain = Domain::periodic(1024);
    std::string name = "bernstein";
    int n_max = 8;
    std::vector<double> alphas = {1, 2, 4, 8, 16, 32, 64};
    double p = 2.0;
    int probes = 100;
    std::uint64_t seed = 1;
    bool cosine_probes = false; // deterministic cos(alpha t) probes instead of random ones
};
ExperimentReport run_bernstein(const BernsteinConfig& cfg);

// Difference-operator growth: ratio = ||Delta_h^k x||_p over
// (h alpha)^k * M_U(k h) * ||x||_p, M_U the translation norm bound.
struct BernsteinDeltaConfig {
    Domain domain = Domain::periodic(1024);
    std::string name = "bernstein_delta";
    int k = 2;
    std::vector<double> alphas = {1, 2, 4, 8, 16, 32};
    std::vector<double> h_vals = {0.5, 0.25, 0.125, 0.0625};
    double p = 2.0;
    int probes = 50;
    std::uint64_t seed = 1;
};
ExperimentReport run_bernstein_delta(const BernsteinDeltaConfig& cfg);

// Direct estimate: E_r(x) against the k-th modulus of x (or of the m-th
// derivative, scaled by mu(m/r)/r^m when sobolev_m > 0) at scale 1/r.
// Rows where E_r is at noise level (< 1e-13 ||x||) are listed but excluded
// from the spread statistic, with a note.
struct JacksonParams {
    std::string name = "jackson";
    std::string x_label = "x";
    int k = 1;
    std::vector<double> r_vals = {2, 4, 8, 16, 32, 64, 128};
    double p = 2.0;
    int sobolev_m = 0;
    double maxmin_bound = 10.0;
};
ExperimentReport run_jackson(const GridFunction& x, const JacksonParams& prm);

// Smoothness-from-approximation harness. Stages: (1) dyadic hypothesis check
// E_{2^j} <= (m/2^{jn}) omega(2^{-j}) with m supplied or auto-fitted (then a
// no-upward-trend check replaces the pointwise one); (2) telescoping sum of
// derivative increments with relative cutoff 1e-10 and a growth diagnostic;
// (3) tail constant: ||A^n x - A^n u_j|| / Omega(2^{-j}) reported; (4) the
// modulus of A^n x against the integral bracket, with a no-blow-up slope
// verdict (log-log slope >= -0.05 as t -> 0).
struct InverseParams {
    std::string name = "inverse";
    std::string x_label = "x";
    int n = 1;
    int k = 1;
    double m_claim = 0.0; // <= 0 means auto-fit
    std::vector<double> t_vals;
    double p = 2.0;
    int j_max = -1; // < 0 means the largest dyadic type the grid resolves
};
ExperimentReport run_inverse(const GridFunction& x, const ModulusSpec& omega,
                             const InverseParams& prm);

// Admissibility battery for one weight; verdict compares the empirical
// result against the expectation.
struct WeightsParams {
    std::string name = "weights_check";
    double t_max = 1000.0;
    int n_samples = 2000;
    bool expect_admissible = true;
};
ExperimentReport run_weights_check(const WeightSpec& w, const WeightsParams& prm);

} // namespace bandlim
