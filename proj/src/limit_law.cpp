#include "hooklaw/limit_law.hpp"

#include "hooklaw/asymptotics.hpp"
#include "hooklaw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hooklaw {

namespace {

constexpr double kPi = std::numbers::pi;

// int_0^y u/(e^u - 1) du for small y from u/(e^u-1) = sum B_k u^k / k!, with
// B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}. Converges for y < 2 pi.
double integral_small(double y) {
    double sum = y - y * y / 4.0;
    const double r = y / (2.0 * kPi);
    double power = y; // y (y / 2 pi)^{2k}
    for (int k = 1; k <= 40; ++k) {
        power *= r * r;
        const double term = 2.0 * zeta(2 * k) * power / (2.0 * k + 1.0);
        sum += (k % 2 ? term : -term);
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// zeta(2) - sum_k e^{-ky} (y/k + 1/k^2), truncated once the tail bound
// e^{-(K+1)y} (y + 1) / (1 - e^{-y}) drops below 1e-13.
double integral_exponential(double y) {
    double sum = 0.0;
    const double one_minus = -std::expm1(-y);
    for (int k = 1;; ++k) {
        const double kk = static_cast<double>(k);
        const double decay = std::exp(-kk * y);
        sum += decay * (y / kk + 1.0 / (kk * kk));
        if (decay * std::exp(-y) * (y + 1.0) / one_minus < 1e-13) break;
    }
    return kZeta2 - sum;
}

} // namespace

double LimitLaw::density(double u) {
    if (!(u > 0.0)) return 0.0;
    if (u < 1e-8) return kNormalization;
    return kNormalization * u / std::expm1(u);
}

double LimitLaw::cdf(double y) {
    if (!(y > 0.0)) return 0.0;
    if (std::isinf(y)) return 1.0;
    const double integral = y < 1.0 ? integral_small(y) : integral_exponential(y);
    return std::min(1.0, kNormalization * integral);
}

double LimitLaw::moment(int m) {
    if (m < 0) throw DomainError("limit moment order must be nonnegative");
    if (m == 0) return 1.0;
    return std::exp(std::lgamma(m + 2.0)) * zeta(m + 2) / kZeta2;
}

double limit_moment(int m) {
    if (m < 1) throw DomainError("limit_moment: m must be at least 1");
    return LimitLaw::moment(m);
}

double LimitLaw::quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile: p must lie in (0, 1)");
    double lo = 0.0, hi = 1.0;
    while (cdf(hi) < p) hi *= 2.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-14 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

GofReport ks_statistic(std::span<const double> sample, int n) {
    if (sample.empty()) throw DomainError("ks_statistic: empty sample");
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());

    GofReport report;
    report.n = n;
    report.sample_count = static_cast<std::int64_t>(sorted.size());
    const double count = static_cast<double>(sorted.size());

    double sum1 = 0.0, sum2 = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        // Ties form one jump of the empirical CDF.
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const double f = LimitLaw::cdf(sorted[i]);
        const double below = static_cast<double>(i) / count;
        const double above = static_cast<double>(j) / count;
        const double gap = std::max(std::abs(f - below), std::abs(above - f));
        if (gap > report.ks_distance) {
            report.ks_distance = gap;
            report.ks_location = sorted[i];
        }
        i = j;
    }
    for (double x : sample) {
        sum1 += x;
        sum2 += x * x;
    }
    report.mean_scaled = sum1 / count;
    report.moment_ratios = {report.mean_scaled / limit_moment(1), (sum2 / count) / limit_moment(2)};
    report.reference_line = 1.95 / std::sqrt(count);
    return report;
}

std::vector<double> ShapeGrid::values() const {
    if (!(t_min > 0.0) || !(t_max > t_min) || points < 2) throw DomainError("invalid shape grid");
    std::vector<double> t(static_cast<std::size_t>(points));
    const double step = std::log(t_max / t_min) / (points - 1);
    for (int i = 0; i < points; ++i) t[static_cast<std::size_t>(i)] = t_min * std::exp(step * i);
    return t;
}

double shape_distance(const Partition& lambda, const ShapeGrid& grid) {
    if (lambda.empty()) throw DomainError("shape_distance: partition must be nonempty");
    const double root = std::sqrt(static_cast<double>(lambda.size()));
    double sup = 0.0;
    for (double t : grid.values()) {
        const double scaled = profile(lambda, t * root) / root;
        sup = std::max(sup, std::abs(scaled - limit_shape(t)));
    }
    return sup;
}

} // namespace hooklaw
