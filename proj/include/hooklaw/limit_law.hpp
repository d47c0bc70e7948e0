#pragma once

#include "hooklaw/partition.hpp"

#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace hooklaw {

// Law on (0, inf) with density 6u / (pi^2 (e^u - 1)): the limit of
// pi Z_n / sqrt(6n).
class LimitLaw {
public:
    static constexpr double kNormalization = 6.0 / (std::numbers::pi * std::numbers::pi);

    static double density(double u);
    static double cdf(double y);
    // (m+1)! zeta(m+2) / zeta(2); m = 0 gives 1.
    static double moment(int m);
    // Inverse CDF by bisection; p in (0, 1).
    static double quantile(double p);
};

double limit_moment(int m);

struct GofReport {
    int n = 0;
    std::int64_t sample_count = 0;
    double ks_distance = 0.0;
    double ks_location = 0.0;
    double mean_scaled = 0.0;
    // Sample moment / limit moment for m = 1, 2.
    std::vector<double> moment_ratios;
    // 1.95 / sqrt(N): the two-sided KS critical value at level 0.001.
    double reference_line = 0.0;
};

// Two-sided Kolmogorov-Smirnov distance between the empirical law of the
// sample and LimitLaw::cdf. Throws DomainError on an empty sample.
GofReport ks_statistic(std::span<const double> sample, int n = 0);

// sup |x_lambda(t sqrt n) / sqrt n - s(t)| over `points` log-spaced t in
// [t_min, t_max].
struct ShapeGrid {
    double t_min = 0.05;
    double t_max = 8.0;
    int points = 400;

    std::vector<double> values() const;
};

double shape_distance(const Partition& lambda, const ShapeGrid& grid = {});

} // namespace hooklaw
