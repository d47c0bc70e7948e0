#include "hooklaw/stats.hpp"

#include "hooklaw/errors.hpp"

#include <cmath>

namespace hooklaw {

namespace {

// Regularized lower incomplete gamma P(a, x) by its power series.
double lower_gamma_series(double a, double x) {
    double term = 1.0 / a, sum = term;
    for (int k = 1; k < 10000; ++k) {
        term *= x / (a + k);
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by Lentz's continued fraction.
double upper_gamma_fraction(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace

double chi_square_pvalue(double statistic, int dof) {
    if (dof < 1) throw DomainError("chi-square needs at least one degree of freedom");
    if (!(statistic > 0.0)) return 1.0;
    const double a = 0.5 * dof, x = 0.5 * statistic;
    return x < a + 1.0 ? 1.0 - lower_gamma_series(a, x) : upper_gamma_fraction(a, x);
}

ChiSquare chi_square_uniform(std::span<const std::int64_t> observed) {
    if (observed.size() < 2) throw DomainError("chi-square needs at least two classes");
    double total = 0.0;
    for (auto o : observed) total += static_cast<double>(o);
    const double expected = total / static_cast<double>(observed.size());
    ChiSquare out;
    for (auto o : observed) {
        const double diff = static_cast<double>(o) - expected;
        out.statistic += diff * diff / expected;
    }
    out.dof = static_cast<int>(observed.size()) - 1;
    out.pvalue = chi_square_pvalue(out.statistic, out.dof);
    return out;
}

} // namespace hooklaw
