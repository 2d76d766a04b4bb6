#pragma once

#include <limits>

#include <bandlim/domain.hpp>

namespace bandlim {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// L_p norm of the samples (rectangle rule in t); the line variant weighs the
// samples by mu(t_j) first. p = kInf gives the weighted sup norm.
double norm(const GridFunction& x, double p);

// Translation (U(tau) x)(t) = x(t + tau), realized as the exact frequency
// phase rotation exp(i xi tau). On the line |tau| is limited to L/4 so the
// periodic wrap-around of the truncated window stays away from the data.
GridFunction shift(const GridFunction& x, double tau);

// k-th forward difference (U(h) - I)^k, equal to the alternating binomial
// sum over U(jh) and applied here as the frequency multiplier
// (exp(i xi h) - 1)^k. Supports k in [0, 8].
GridFunction finite_difference(const GridFunction& x, double h, int k);

// sup_{0 < tau <= t} of the p-norm of the k-th difference, approximated on a
// deterministic tau grid: n_tau uniform points on (0, t] unioned with the
// same pattern at every dyadic subscale t/2, t/4, ... down to 2^-24. The
// grids nest, so values at dyadically related t are monotone by
// construction. t = 0 returns 0.
double modulus_of_continuity(const GridFunction& x, double t, int k, double p,
                             int n_tau = 64);

// Upper bound for the translation operator norm at offset t: 1 on the
// circle, mu(|t|) on the weighted line.
double group_norm_bound(const Domain& d, double t);

// True when a line-domain function has decayed enough at the truncation edge
// for the window to be trusted: |x(+-L)| mu(L) < 1e-8 * ||x||_p. Periodic
// functions pass trivially.
bool check_line_decay(const GridFunction& x, double p = 2.0);

} // namespace bandlim
