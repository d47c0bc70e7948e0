#pragma once

#include <numbers>

namespace hooklaw {

// A truncated positive series with an upper bound on the omitted tail.
struct SeriesSum {
    double value = 0.0;
    double tail_bound = 0.0;
    long terms = 0;
};

// Default number of terms for series in x = e^{-d}: ceil(40 / d).
long default_cutoff(double d);

// a(e^{-d}) = sum_j j e^{-jd} / (1 - e^{-jd}) for the Euler product g.
// cutoff <= 0 selects default_cutoff(d). Throws DomainError for d <= 0 and
// ToleranceError when the tail bound exceeds 1e-12 of the value.
SeriesSum saddle_a(double d, long cutoff = 0);

// b(e^{-d}) = sum_j j^2 e^{-jd} / (1 - e^{-jd})^2, which is also -da/dd.
SeriesSum saddle_b(double d, long cutoff = 0);

// log g(e^{-d}) = -sum_j log(1 - e^{-jd}).
SeriesSum log_euler_product(double d, long cutoff = 0);

struct SaddleSolution {
    int n = 0;
    double d_n = 0.0;     // r = e^{-d_n}
    double a_val = 0.0;
    double b_val = 0.0;
    double residual = 0.0; // |a(e^{-d_n}) - n|
};

// Root of a(e^{-d}) = n: bisection on [1e-6, 10] to width 1e-4, then Newton
// to relative tolerance 1e-10.
SaddleSolution solve_saddle(int n);

// pi / sqrt(6n) - 1 / (4n).
double d_n_expansion(int n);

// exp(pi sqrt(2n/3)) / (4 n sqrt 3) and its logarithm.
double hardy_ramanujan(int n);
double log_hardy_ramanujan(int n);

// e^{n d_n} g(e^{-d_n}) / sqrt(2 pi b(e^{-d_n})) and its logarithm.
double hayman_pn_estimate(int n, long cutoff = 0);
double log_hayman_pn_estimate(int n, long cutoff = 0);

// Riemann zeta at integer m >= 2.
double zeta(int m);

// (n / zeta(2))^{(m+1)/2} m! zeta(m+1).
double moment_Y_asymptotic(int n, int m);

// Limit shape s(t) = -(sqrt 6 / pi) log(1 - e^{-pi t / sqrt 6}) for t > 0, the
// solution of e^{-pi s / sqrt 6} + e^{-pi t / sqrt 6} = 1.
double limit_shape(double t);

// e^{-pi s / sqrt 6} + e^{-pi t / sqrt 6} - 1 with s = limit_shape(t).
double limit_shape_residual(double t);

inline constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

} // namespace hooklaw
