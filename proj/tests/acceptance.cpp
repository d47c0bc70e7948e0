// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Reference values come from brute force, quadrature or Boost and are
// computed independently of the library paths under test.

#include "hooklaw/asymptotics.hpp"
#include "hooklaw/enumeration.hpp"
#include "hooklaw/limit_law.hpp"
#include "hooklaw/partition.hpp"
#include "hooklaw/sampler.hpp"
#include "hooklaw/series.hpp"
#include "hooklaw/stats.hpp"
#include "oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

using namespace hooklaw;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kThreads = 1;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

using Criterion = std::function<void(Outcome&)>;

// Criterion 1
void han_identity(Outcome& out) {
    for (int n = 1; n <= 12; ++n) {
        std::array<BigInt, 5> hooks, parts;
        std::array<std::uint64_t, 5> hooks_oracle{}, parts_oracle{};
        for_each_partition(n, [&](std::span<const int> view) {
            const Partition lambda(std::vector<int>(view.begin(), view.end()));
            for (const Cell c : cells(lambda)) {
                BigInt h = hook_length(lambda, c), power = h;
                for (int m = 1; m <= 4; ++m, power *= h) hooks[m] += power;
            }
            for (int part : lambda.parts()) {
                BigInt power = BigInt(part) * part;
                for (int m = 1; m <= 4; ++m, power *= part) parts[m] += power;
            }
        });
        for (const auto& p : oracle::partitions(n)) {
            for (int t = 1; t <= static_cast<int>(p.size()); ++t)
                for (int s = 1; s <= p[static_cast<std::size_t>(t - 1)]; ++s) {
                    const std::uint64_t h = static_cast<std::uint64_t>(oracle::hook_by_counting(p, t, s));
                    std::uint64_t power = h;
                    for (int m = 1; m <= 4; ++m, power *= h) hooks_oracle[m] += power;
                }
            for (int part : p) {
                std::uint64_t power = static_cast<std::uint64_t>(part) * static_cast<std::uint64_t>(part);
                for (int m = 1; m <= 4; ++m, power *= static_cast<std::uint64_t>(part)) parts_oracle[m] += power;
            }
        }
        for (int m = 1; m <= 4; ++m) {
            const std::string at = "n=" + std::to_string(n) + " m=" + std::to_string(m);
            out.require(hooks[m] == parts[m], "hook sum != part sum at " + at);
            out.require(hooks[m] == static_cast<unsigned long>(hooks_oracle[m]), "hook sum vs brute force at " + at);
            out.require(parts[m] == static_cast<unsigned long>(parts_oracle[m]), "part sum vs brute force at " + at);
        }
    }
    out.detail << "n<=12, m=1..4 exact";
}

// Criterion 2
void series_equivalence(Outcome& out) {
    for (int m = 1; m <= 4; ++m) {
        const MomentSeries series(m, 12);
        for (int n = 1; n <= 12; ++n) {
            std::uint64_t oracle_sum = 0, count = 0;
            for (const auto& p : oracle::partitions(n)) {
                ++count;
                for (int part : p) {
                    std::uint64_t power = 1;
                    for (int i = 0; i < m; ++i) power *= static_cast<std::uint64_t>(part);
                    oracle_sum += power;
                }
            }
            const PowerSums sums = power_sums(n, m, kThreads);
            const std::string at = "n=" + std::to_string(n) + " m=" + std::to_string(m);
            out.require(series.coefficient(n) == static_cast<unsigned long>(oracle_sum), "series vs brute force at " + at);
            out.require(series.coefficient(n) == sums.part_power[static_cast<std::size_t>(m)], "series vs enumeration at " + at);
            out.require(series.euler()[n] == static_cast<unsigned long>(count), "p(n) at " + at);
        }
    }
    const int top = 2000;
    const MomentSeries first(1, top);
    const PartitionFunctionTable table(top);
    for (int n = 1; n <= top; ++n)
        if (first.coefficient(n) != table[n] * n) out.require(false, "[x^n] g F_1 != n p(n) at n=" + std::to_string(n));
    out.detail << "n<=12 m<=4 enumeration; n p(n) identity n<=" << top;
}

// Criterion 3
void worked_example(Outcome& out) {
    const Partition lambda({5, 4, 3, 3, 2, 2, 2, 1});
    const Partition conj = conjugate(lambda);
    out.require(conj == Partition({8, 7, 4, 2, 1}), "conjugate is " + conj.to_string());
    const int h = hook_length(lambda, Cell{3, 2});
    out.require(h == 6, "hook(3,2) = " + std::to_string(h));
    out.require(h == oracle::hook_by_counting({5, 4, 3, 3, 2, 2, 2, 1}, 3, 2), "hook vs brute force");
    out.detail << "conjugate=" << conj.to_string() << " h(3,2)=" << h;
}

// Criterion 4
void partition_counts(Outcome& out) {
    const PartitionFunctionTable table(10000);
    for (int n = 0; n <= 40; ++n)
        out.require(table[n] == static_cast<unsigned long>(oracle::partitions(n).size()),
                    "p(" + std::to_string(n) + ") vs enumeration");
    out.require(table[100] == 190569292UL, "p(100)");
    double previous = 0.0;
    for (int n : {100, 1000, 10000}) {
        const double ratio = std::exp(log_hardy_ramanujan(n) - log_of(table[n]));
        out.detail << "HR(" << n << ")=" << ratio << " ";
        if (n == 100) out.require(ratio > 1.0 && ratio < 1.10, "HR ratio at 100 outside (1, 1.1)");
        else out.require(ratio < previous && ratio > 1.0, "HR ratio not decreasing toward 1");
        previous = ratio;
    }
}

// Saddle root by plain bisection on the defining series, summed directly.
double bisect_saddle(int n) {
    auto a = [](double d) {
        double sum = 0.0;
        for (long j = static_cast<long>(60.0 / d); j >= 1; --j) {
            const double x = std::exp(-static_cast<double>(j) * d);
            sum += static_cast<double>(j) * x / (1.0 - x);
        }
        return sum;
    };
    double lo = 1e-4, hi = 5.0;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (a(mid) > n ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Criterion 5
void saddle_machinery(Outcome& out) {
    for (int n : {100, 1000, 10000}) {
        const SaddleSolution sol = solve_saddle(n);
        out.require(sol.residual <= 1e-8 * n, "residual at n=" + std::to_string(n));
        out.require(std::abs(sol.d_n / bisect_saddle(n) - 1.0) < 1e-9, "d_n vs bisection at n=" + std::to_string(n));
    }
    double previous = 0.0;
    out.detail << "gap*n:";
    for (int n : {100, 1000, 10000, 100000}) {
        const double scaled = std::abs(solve_saddle(n).d_n - (kPi / std::sqrt(6.0 * n) - 1.0 / (4.0 * n))) * n;
        out.detail << " " << scaled;
        if (n > 100) out.require(scaled < previous, "gap * n not shrinking at n=" + std::to_string(n));
        previous = scaled;
    }
    const double b_ratio = solve_saddle(10000).b_val / std::pow(10000.0, 1.5) / (2.0 * std::sqrt(6.0) / kPi);
    out.require(std::abs(b_ratio - 1.0) < 0.05, "b ratio");
    const PartitionFunctionTable table(1000);
    const double err100 = std::abs(std::exp(log_hayman_pn_estimate(100) - log_of(table[100])) - 1.0);
    const double err1000 = std::abs(std::exp(log_hayman_pn_estimate(1000) - log_of(table[1000])) - 1.0);
    out.require(err100 < 0.02, "Hayman error at 100");
    out.require(err1000 < err100, "Hayman not improving at 1000");
    out.detail << "; b ratio " << b_ratio << "; Hayman err " << err100 << " -> " << err1000;
}

// Criterion 6
void moment_asymptotic(Outcome& out) {
    const int n = 2000;
    const MomentSeries series(2, n);
    const double scaled = kPi * series.expectation(n).get_d() / (n * std::sqrt(6.0 * n));
    const double target = 12.0 * boost::math::zeta(3.0) / (kPi * kPi);
    out.require(std::abs(scaled / target - 1.0) < 0.10, "outside 10%");
    out.detail << "n=2000 scaled mean " << scaled << " vs " << target;
}

// Criterion 7
void monte_carlo_limit(Outcome& out) {
    const std::int64_t count = 100000;
    double previous = 1.0;
    for (int n : {100, 1000, 10000}) {
        const auto obs = sample_hooks(make_sampler_config(n, 1000 + static_cast<std::uint64_t>(n)), count, kThreads);
        std::vector<double> scaled;
        for (const auto& o : obs) scaled.push_back(o.scaled);
        const double ks = ks_statistic(scaled, n).ks_distance;
        out.detail << "KS(" << n << ")=" << ks << " ";
        out.require(ks < previous, "KS not decreasing at n=" + std::to_string(n));
        previous = ks;
    }
    const int big = 100000;
    const auto obs = sample_hooks(make_sampler_config(big, 1000 + big), count, kThreads);
    double sum = 0.0, sum2 = 0.0;
    for (const auto& o : obs) {
        sum += o.scaled;
        sum2 += o.scaled * o.scaled;
    }
    const double mean = sum / count;
    const double sigma = std::sqrt((sum2 / count - mean * mean) / count);
    const double target = 12.0 * boost::math::zeta(3.0) / (kPi * kPi);
    out.require(std::abs(mean - target) <= 0.03 * target + 3.0 * sigma, "mean at n=1e5");
    out.detail << "mean(1e5)=" << mean << " +- " << 3.0 * sigma;
}

// Criterion 8
void sampler_exactness(Outcome& out) {
    std::map<std::vector<int>, std::size_t> index;
    for (const auto& p : oracle::partitions(5)) index.emplace(p, index.size());
    for (auto algorithm : {Algorithm::exact_recursive, Algorithm::fristedt_rejection}) {
        std::vector<std::int64_t> counts(index.size(), 0);
        for (const auto& p : sample_partitions(make_sampler_config(5, 20240501, algorithm), 100000, kThreads)) {
            const auto it = index.find({p.parts().begin(), p.parts().end()});
            if (it == index.end()) {
                out.require(false, "draw outside partitions of 5");
                return;
            }
            ++counts[it->second];
        }
        const ChiSquare chi = chi_square_uniform(counts);
        out.require(counts.size() == 7 && chi.pvalue > 0.001, std::string(to_string(algorithm)) + " chi-square");
        out.detail << to_string(algorithm) << " p=" << chi.pvalue << " ";
    }
    for (int n : {5, 137, 2000})
        for (const auto& p : sample_partitions(make_sampler_config(n, 7, Algorithm::fristedt_rejection), 500, kThreads)) {
            std::int64_t weight = 0;
            for (int part : p.parts()) weight += part;
            if (weight != n) out.require(false, "fristedt draw of size " + std::to_string(weight));
        }
    out.detail << "fristedt sizes exact";
}

// Criterion 9
void limit_law_internals(Outcome& out) {
    using boost::math::quadrature::gauss_kronrod;
    auto density = [](double u) { return 6.0 * u / (kPi * kPi * std::expm1(u)); };
    double worst = 0.0;
    for (double y : {0.5, 1.0, 2.0, 5.0}) {
        const double reference = gauss_kronrod<double, 61>::integrate(density, 0.0, y, 15, 1e-14);
        worst = std::max(worst, std::abs(LimitLaw::cdf(y) - reference));
    }
    out.require(worst < 1e-9, "cdf vs quadrature");
    const double mass = gauss_kronrod<double, 61>::integrate(LimitLaw::density, 0.0,
                                                              std::numeric_limits<double>::infinity(), 15, 1e-14);
    out.require(std::abs(mass - 1.0) < 1e-10, "normalization");
    out.require(std::abs(limit_moment(2) - 2.0 * kPi * kPi / 5.0) < 1e-8, "limit_moment(2)");
    double residual = 0.0;
    for (double t = 0.01; t <= 20.0; t += 0.01) {
        const double s = limit_shape(t);
        residual = std::max(residual, std::abs(std::exp(-kPi * s / std::sqrt(6.0)) + std::exp(-kPi * t / std::sqrt(6.0)) - 1.0));
    }
    out.require(residual < 1e-12, "limit shape residual");
    out.detail << "cdf err " << worst << ", mass-1 " << mass - 1.0 << ", shape residual " << residual;
}

std::string capture(const std::string& command) {
    std::string text;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return text;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
    if (pclose(pipe) != 0) text += "\n<nonzero exit>";
    return text;
}

// Criterion 10
void determinism(Outcome& out) {
    const std::string base = std::string("'") + HOOKLAW_BINARY + "' sample --n 1000 --count 1000 --seed 42";
    const std::string first = capture(base + " 2>/dev/null");
    const std::string second = capture(base + " 2>/dev/null");
    const std::string one = capture(base + " --threads 1 2>/dev/null");
    const std::string four = capture(base + " --threads 4 2>/dev/null");
    const std::string env = capture("HOOKLAW_THREADS=3 " + base + " 2>/dev/null");
    out.require(first.size() > 1000 && first.find("nonzero exit") == std::string::npos, "binary output");
    out.require(first == second, "repeat run differs");
    out.require(first == one && first == four && first == env, "thread count changes output");
    out.detail << first.size() << " bytes identical across runs and thread counts";
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria{
        {"han-identity", han_identity},
        {"series-equivalence", series_equivalence},
        {"worked-example", worked_example},
        {"partition-count", partition_counts},
        {"saddle-machinery", saddle_machinery},
        {"moment-asymptotic", moment_asymptotic},
        {"monte-carlo-limit", monte_carlo_limit},
        {"sampler-exactness", sampler_exactness},
        {"limit-law-internals", limit_law_internals},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(outcome);
        } catch (const std::exception& e) {
            outcome.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!outcome.passed) ++failures;
        char head[64];
        std::snprintf(head, sizeof head, "%s %2zu %-20s", outcome.passed ? "PASS" : "FAIL", i + 1,
                      criteria[i].first.c_str());
        std::cout << head << " " << outcome.detail.str() << " [" << std::fixed << std::setprecision(1) << seconds
                  << "s]" << std::defaultfloat << std::setprecision(6) << std::endl;
    }
    std::cout << (failures ? "FAIL" : "PASS") << ": " << criteria.size() - static_cast<std::size_t>(failures) << "/"
              << criteria.size() << " criteria\n";
    return failures ? 1 : 0;
}
