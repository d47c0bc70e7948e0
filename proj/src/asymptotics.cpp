#include "hooklaw/asymptotics.hpp"

#include "hooklaw/errors.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace hooklaw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRelativeTail = 1e-12;

void require_positive(double d, const char* what) {
    if (!(d > 0.0) || !std::isfinite(d)) {
        std::ostringstream msg;
        msg << what << ": d must be positive and finite, got " << d;
        throw DomainError(msg.str());
    }
}

void certify(const SeriesSum& s, const char* what) {
    if (s.tail_bound > kRelativeTail * std::abs(s.value)) {
        std::ostringstream msg;
        msg << what << ": tail bound " << s.tail_bound << " after " << s.terms
            << " terms exceeds " << kRelativeTail << " relative to " << s.value;
        throw ToleranceError(msg.str());
    }
}

long resolve_cutoff(double d, long cutoff) { return cutoff > 0 ? cutoff : default_cutoff(d); }

} // namespace

long default_cutoff(double d) { return static_cast<long>(std::ceil(40.0 / d)); }

SeriesSum saddle_a(double d, long cutoff) {
    require_positive(d, "saddle_a");
    const long J = resolve_cutoff(d, cutoff);
    SeriesSum s;
    s.terms = J;
    // Sum small terms first.
    for (long j = J; j >= 1; --j) {
        const double x = std::exp(-static_cast<double>(j) * d);
        s.value += static_cast<double>(j) * x / (-std::expm1(-static_cast<double>(j) * d));
    }
    // Tail: sum_{j>J} j x^j / (1 - x^j) <= (1 - x^{J+1})^{-1} sum_{j>J} j x^j.
    const double x = std::exp(-d);
    const double one_minus_x = -std::expm1(-d);
    const double jp = static_cast<double>(J + 1);
    const double xJ1 = std::exp(-jp * d);
    const double tail_geometric = xJ1 * (jp - static_cast<double>(J) * x) / (one_minus_x * one_minus_x);
    s.tail_bound = tail_geometric / -std::expm1(-jp * d);
    certify(s, "saddle_a");
    return s;
}

SeriesSum saddle_b(double d, long cutoff) {
    require_positive(d, "saddle_b");
    const long J = resolve_cutoff(d, cutoff);
    SeriesSum s;
    s.terms = J;
    for (long j = J; j >= 1; --j) {
        const double jd = static_cast<double>(j) * d;
        const double q = -std::expm1(-jd);
        s.value += static_cast<double>(j) * static_cast<double>(j) * std::exp(-jd) / (q * q);
    }
    // sum_{k>=0} (J+1+k)^2 x^{J+1+k} in closed form, over (1 - x^{J+1})^2.
    const double x = std::exp(-d);
    const double q = -std::expm1(-d);
    const double jp = static_cast<double>(J + 1);
    const double head = -std::expm1(-jp * d);
    const double moments = jp * jp / q + 2.0 * jp * x / (q * q) + x * (1.0 + x) / (q * q * q);
    s.tail_bound = std::exp(-jp * d) * moments / (head * head);
    certify(s, "saddle_b");
    return s;
}

SeriesSum log_euler_product(double d, long cutoff) {
    require_positive(d, "log_euler_product");
    const long J = resolve_cutoff(d, cutoff);
    SeriesSum s;
    s.terms = J;
    for (long j = J; j >= 1; --j) s.value -= std::log1p(-std::exp(-static_cast<double>(j) * d));
    // -log(1 - y) <= y / (1 - y) and sum_{j>J} x^j = x^{J+1} / (1 - x).
    const double jp = static_cast<double>(J + 1);
    const double head = -std::expm1(-jp * d);
    s.tail_bound = std::exp(-jp * d) / (-std::expm1(-d) * head);
    certify(s, "log_euler_product");
    return s;
}

SaddleSolution solve_saddle(int n) {
    if (n < 1) throw DomainError("solve_saddle: n must be at least 1");
    const double target = static_cast<double>(n);
    double lo = 1e-6, hi = 10.0;

    // a(e^{-d}) >= sum_j j x^j = x / (1 - x)^2 brackets the left end without
    // summing ~4e7 terms; a(e^{-10}) ~ 4.5e-5 brackets the right.
    const double xlo = std::exp(-lo), omlo = -std::expm1(-lo);
    if (!(xlo / (omlo * omlo) > target) || !(saddle_a(hi).value < target))
        throw InvariantError("solve_saddle: root of a(e^{-d}) = n not bracketed in [1e-6, 10]");

    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        if (saddle_a(mid).value > target)
            lo = mid;
        else
            hi = mid;
    }

    double d = 0.5 * (lo + hi);
    double step = hi - lo;
    for (int iter = 0; iter < 50 && step > 1e-12 * d; ++iter) {
        // da/dd = -b
        const double next = d + (saddle_a(d).value - target) / saddle_b(d).value;
        step = std::abs(next - d);
        d = next;
    }
    if (step > 1e-10 * d) throw InvariantError("solve_saddle: Newton iteration did not converge");

    SaddleSolution sol;
    sol.n = n;
    sol.d_n = d;
    sol.a_val = saddle_a(d).value;
    sol.b_val = saddle_b(d).value;
    sol.residual = std::abs(sol.a_val - target);
    if (!(sol.d_n > 0.0) || !(sol.b_val > 0.0))
        throw InvariantError("solve_saddle: non-positive saddle solution");
    return sol;
}

double d_n_expansion(int n) {
    if (n < 1) throw DomainError("d_n_expansion: n must be at least 1");
    const double nn = static_cast<double>(n);
    return kPi / std::sqrt(6.0 * nn) - 1.0 / (4.0 * nn);
}

double log_hardy_ramanujan(int n) {
    if (n < 1) throw DomainError("hardy_ramanujan: n must be at least 1");
    const double nn = static_cast<double>(n);
    return kPi * std::sqrt(2.0 * nn / 3.0) - std::log(4.0 * nn * std::sqrt(3.0));
}

double hardy_ramanujan(int n) { return std::exp(log_hardy_ramanujan(n)); }

double log_hayman_pn_estimate(int n, long cutoff) {
    const SaddleSolution sol = solve_saddle(n);
    const double log_g = log_euler_product(sol.d_n, cutoff).value;
    const double b = cutoff > 0 ? saddle_b(sol.d_n, cutoff).value : sol.b_val;
    return static_cast<double>(n) * sol.d_n + log_g - 0.5 * std::log(2.0 * kPi * b);
}

double hayman_pn_estimate(int n, long cutoff) { return std::exp(log_hayman_pn_estimate(n, cutoff)); }

double zeta(int m) {
    if (m < 2) throw DomainError("zeta: only integer arguments m >= 2 are supported");
    // Direct sum to N - 1, then Euler-Maclaurin for the tail starting at N.
    constexpr int N = 12;
    static constexpr std::array<double, 7> bernoulli2k{
        1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};
    const double s = static_cast<double>(m);
    double head = 0.0;
    for (int j = N - 1; j >= 1; --j) head += std::pow(static_cast<double>(j), -s);
    const double nn = static_cast<double>(N);
    double tail = std::pow(nn, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(nn, -s);
    // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    double rising = s;      // s (s+1) ... (s + 2k - 2)
    double factorial = 2.0; // (2k)!
    for (std::size_t k = 1; k <= bernoulli2k.size(); ++k) {
        const double kk = static_cast<double>(k);
        tail += bernoulli2k[k - 1] / factorial * rising * std::pow(nn, -s - 2.0 * kk + 1.0);
        rising *= (s + 2.0 * kk - 1.0) * (s + 2.0 * kk);
        factorial *= (2.0 * kk + 1.0) * (2.0 * kk + 2.0);
    }
    return head + tail;
}

double moment_Y_asymptotic(int n, int m) {
    if (n < 1 || m < 1) throw DomainError("moment_Y_asymptotic: n and m must be at least 1");
    const double log_scale = 0.5 * (m + 1) * std::log(static_cast<double>(n) / kZeta2);
    return std::exp(log_scale + std::lgamma(m + 1.0)) * zeta(m + 1);
}

double limit_shape(double t) {
    if (!(t > 0.0)) throw DomainError("limit_shape: t must be positive");
    // Solves e^{-c s} + e^{-c t} = 1 for s, c = pi / sqrt 6.
    const double c = kPi / std::sqrt(6.0);
    return -std::log(-std::expm1(-c * t)) / c;
}

double limit_shape_residual(double t) {
    const double c = kPi / std::sqrt(6.0);
    const double s = limit_shape(t);
    return std::exp(-c * s) + std::exp(-c * t) - 1.0;
}

} // namespace hooklaw
