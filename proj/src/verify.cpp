#include "hooklaw/verify.hpp"

#include "hooklaw/asymptotics.hpp"
#include "hooklaw/enumeration.hpp"
#include "hooklaw/limit_law.hpp"
#include "hooklaw/sampler.hpp"
#include "hooklaw/series.hpp"
#include "hooklaw/stats.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

namespace hooklaw {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
    std::ostringstream out;
    out << std::setprecision(6) << x;
    return out.str();
}

// Adaptive Simpson; independent of the closed-form CDF series.
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
    const double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return simpson(f, a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, 50);
}

CheckResult check_worked_example() {
    CheckResult r{"worked-example", false, {}, 0.0};
    const Partition lambda = Partition::parse("5,4,3,3,2,2,2,1");
    const Partition conj = conjugate(lambda);
    const int h = hook_length(lambda, {3, 2});
    r.passed = conj.to_string() == "8,7,4,2,1" && h == 6;
    r.detail = "conjugate=" + conj.to_string() + " h(3,2)=" + std::to_string(h);
    return r;
}

CheckResult check_lemma1(int max_n, int max_m) {
    CheckResult r{"lemma1-moments", true, {}, 0.0};
    for (int n = 1; n <= max_n && r.passed; ++n)
        for (int m = 0; m <= max_m; ++m)
            if (moment_Z(n, m) != moment_Y(n, m + 1) / n) {
                r.passed = false;
                r.detail = "E(Z^m) != E(Y_{m+1})/n at n=" + std::to_string(n) + " m=" + std::to_string(m);
                break;
            }
    if (r.passed) r.detail = "n<=" + std::to_string(max_n) + ", m<=" + std::to_string(max_m);
    return r;
}

CheckResult check_generating_function(int max_n, int max_m, int identity_n) {
    CheckResult r{"lemma2-series", true, {}, 0.0};
    for (int m = 1; m <= max_m && r.passed; ++m) {
        const MomentSeries series(m, max_n);
        for (int n = 1; n <= max_n; ++n) {
            const PowerSums sums = power_sums(n, m);
            if (series.coefficient(n) != sums.part_power[static_cast<std::size_t>(m)]) {
                r.passed = false;
                r.detail = "[x^n] g F_m mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
                break;
            }
        }
    }
    if (!r.passed) return r;
    const MomentSeries first(1, identity_n);
    for (int n = 1; n <= identity_n; ++n)
        if (first.coefficient(n) != first.euler()[n] * n) {
            r.passed = false;
            r.detail = "[x^n] g F_1 != n p(n) at n=" + std::to_string(n);
            return r;
        }
    r.detail = "enumeration n<=" + std::to_string(max_n) + "; n p(n) identity n<=" + std::to_string(identity_n);
    return r;
}

CheckResult check_partition_count(int max_n) {
    CheckResult r{"partition-count", true, {}, 0.0};
    const PartitionFunctionTable table(std::max(max_n, 100));
    for (int n = 0; n <= max_n; ++n) {
        std::uint64_t count = 0;
        for (PartitionStream it(n); !it.done(); it.advance()) ++count;
        if (table[n] != static_cast<unsigned long>(count)) {
            r.passed = false;
            r.detail = "p(" + std::to_string(n) + ") recurrence != enumeration";
            return r;
        }
    }
    r.passed = table[100] == 190569292;
    r.detail = "enumeration n<=" + std::to_string(max_n) + ", p(100)=" + decimal(table[100]);
    return r;
}

CheckResult check_tableaux(int max_n) {
    CheckResult r{"tableaux-rsk", true, {}, 0.0};
    for (int n = 1; n <= max_n; ++n) {
        BigInt sum = 0, fact;
        for (PartitionStream it(n); !it.done(); it.advance()) {
            const BigInt d = tableaux_count(it.partition());
            sum += d * d;
        }
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        if (sum != fact) {
            r.passed = false;
            r.detail = "sum d(lambda)^2 != n! at n=" + std::to_string(n);
            return r;
        }
    }
    r.detail = "n<=" + std::to_string(max_n);
    return r;
}

CheckResult check_saddle() {
    CheckResult r{"saddle-point", true, {}, 0.0};
    std::ostringstream detail;
    for (int n : {100, 1000, 10000}) {
        const SaddleSolution sol = solve_saddle(n);
        if (sol.residual > 1e-8 * n) r.passed = false;
    }
    double previous = 1.0;
    for (int n : {100, 1000, 10000, 100000}) {
        const double scaled_gap = std::abs(solve_saddle(n).d_n - d_n_expansion(n)) * n;
        if (!(scaled_gap < previous)) r.passed = false;
        previous = scaled_gap;
    }
    const double b_ratio = solve_saddle(10000).b_val / std::pow(10000.0, 1.5) / (2.0 * std::sqrt(6.0) / kPi);
    if (std::abs(b_ratio - 1.0) > 0.05) r.passed = false;

    const PartitionFunctionTable table(1000);
    const double err100 = std::abs(std::exp(log_hayman_pn_estimate(100) - log_of(table[100])) - 1.0);
    const double err1000 = std::abs(std::exp(log_hayman_pn_estimate(1000) - log_of(table[1000])) - 1.0);
    if (!(err100 < 0.02) || !(err1000 < err100)) r.passed = false;
    detail << "b ratio " << fmt(b_ratio) << ", hayman err " << fmt(err100) << " -> " << fmt(err1000);
    r.detail = detail.str();
    return r;
}

CheckResult check_hardy_ramanujan() {
    CheckResult r{"hardy-ramanujan", true, {}, 0.0};
    const PartitionFunctionTable table(10000);
    double previous = 0.0;
    std::ostringstream detail;
    for (int n : {100, 1000, 10000}) {
        const double ratio = std::exp(log_hardy_ramanujan(n) - log_of(table[n]));
        if (n == 100 && !(ratio > 1.0 && ratio < 1.10)) r.passed = false;
        if (n != 100 && !(ratio < previous && ratio > 1.0)) r.passed = false;
        previous = ratio;
        detail << "n=" << n << ":" << fmt(ratio) << " ";
    }
    r.detail = detail.str();
    return r;
}

CheckResult check_limit_law() {
    CheckResult r{"limit-law", true, {}, 0.0};
    if (!(LimitLaw::cdf(40.0) > 1.0 - 1e-10)) r.passed = false;
    double worst = 0.0;
    for (double y : {0.5, 1.0, 2.0, 5.0}) {
        const double q = integrate(LimitLaw::density, 0.0, y, 1e-13);
        worst = std::max(worst, std::abs(q - LimitLaw::cdf(y)));
    }
    if (worst > 1e-9) r.passed = false;
    if (std::abs(limit_moment(2) - 2.0 * kPi * kPi / 5.0) > 1e-8) r.passed = false;
    if (std::abs(zeta(2) * 6.0 / (kPi * kPi) - 1.0) > 1e-10) r.passed = false;
    double shape = 0.0;
    for (double t = 0.01; t < 20.0; t *= 1.1) shape = std::max(shape, std::abs(limit_shape_residual(t)));
    if (shape >= 1e-12) r.passed = false;
    r.detail = "cdf-vs-quadrature " + fmt(worst) + ", shape residual " + fmt(shape);
    return r;
}

CheckResult check_moment_asymptotic(int n) {
    CheckResult r{"moment-asymptotic", false, {}, 0.0};
    const MomentSeries series(2, n);
    // E(Z_n) = E(Y_{2,n}) / n
    const double mean_z = series.expectation(n).get_d() / n;
    const double scaled = kPi * mean_z / std::sqrt(6.0 * n);
    const double target = limit_moment(1);
    r.passed = std::abs(scaled / target - 1.0) < 0.10;
    r.detail = "n=" + std::to_string(n) + " scaled mean " + fmt(scaled) + " vs " + fmt(target);
    return r;
}

CheckResult check_sampler_uniformity(int threads) {
    CheckResult r{"sampler-chi-square", true, {}, 0.0};
    const int n = 5;
    const auto all = enumerate_all(n);
    std::ostringstream detail;
    for (auto algo : {Algorithm::exact_recursive, Algorithm::fristedt_rejection}) {
        const SamplerConfig cfg = make_sampler_config(n, 20240501, algo);
        const auto draws = sample_partitions(cfg, 100000, threads);
        std::vector<std::int64_t> counts(all.size(), 0);
        for (const auto& lambda : draws) {
            if (lambda.size() != n) r.passed = false;
            for (std::size_t k = 0; k < all.size(); ++k)
                if (all[k] == lambda) ++counts[k];
        }
        const ChiSquare chi = chi_square_uniform(counts);
        if (!(chi.pvalue > 0.001)) r.passed = false;
        detail << to_string(algo) << " p=" << fmt(chi.pvalue) << " ";
    }
    r.detail = detail.str();
    return r;
}

CheckResult check_monte_carlo(int threads) {
    CheckResult r{"theorem-monte-carlo", true, {}, 0.0};
    std::ostringstream detail;
    double previous = 1.0;
    for (int n : {100, 1000, 10000}) {
        const auto obs = sample_hooks(make_sampler_config(n, 1000 + static_cast<std::uint64_t>(n)), 100000, threads);
        std::vector<double> scaled;
        scaled.reserve(obs.size());
        for (const auto& o : obs) scaled.push_back(o.scaled);
        const GofReport report = ks_statistic(scaled, n);
        if (!(report.ks_distance < previous)) r.passed = false;
        previous = report.ks_distance;
        detail << "KS(" << n << ")=" << fmt(report.ks_distance) << " ";
    }
    const int big = 100000;
    const auto obs = sample_hooks(make_sampler_config(big, 1000 + big), 100000, threads);
    double sum = 0.0, sum2 = 0.0;
    for (const auto& o : obs) {
        sum += o.scaled;
        sum2 += o.scaled * o.scaled;
    }
    const double count = static_cast<double>(obs.size());
    const double mean = sum / count;
    const double sigma = std::sqrt((sum2 / count - mean * mean) / count);
    const double target = limit_moment(1);
    if (!(std::abs(mean - target) <= 0.03 * target + 3.0 * sigma)) r.passed = false;
    detail << "mean(" << big << ")=" << fmt(mean) << " +- " << fmt(3.0 * sigma);
    r.detail = detail.str();
    return r;
}

CheckResult check_determinism(int threads) {
    CheckResult r{"determinism", false, {}, 0.0};
    const SamplerConfig cfg = make_sampler_config(1000, 42);
    const auto serial = sample_hooks(cfg, 1000, 1);
    const auto parallel = sample_hooks(cfg, 1000, std::max(threads, 3));
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i) same = serial[i].hook == parallel[i].hook;
    r.passed = same;
    r.detail = "n=1000 count=1000 seed=42, 1 vs " + std::to_string(std::max(threads, 3)) + " threads";
    return r;
}

template <class F>
CheckResult timed(F&& check, std::ostream& report) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = check();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(22) << r.name << " " << r.detail
           << " [" << std::fixed << std::setprecision(1) << r.seconds << "s]" << std::defaultfloat << "\n"
           << std::flush;
    return r;
}

} // namespace

CheckResult check_han_identity(int max_n, int max_m, const HookFunction& hook) {
    CheckResult r{"han-identity", true, {}, 0.0};
    for (int n = 1; n <= max_n; ++n) {
        std::vector<BigInt> hook_sum(static_cast<std::size_t>(max_m) + 1, 0);
        std::vector<BigInt> part_sum(static_cast<std::size_t>(max_m) + 1, 0);
        BigInt power;
        for (PartitionStream it(n); !it.done(); it.advance()) {
            const Partition lambda = it.partition();
            for (int m = 1; m <= max_m; ++m) {
                for (const Cell c : cells(lambda)) {
                    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(hook(lambda, c)),
                                  static_cast<unsigned long>(m));
                    hook_sum[static_cast<std::size_t>(m)] += power;
                }
                for (int p : lambda.parts()) {
                    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(m + 1));
                    part_sum[static_cast<std::size_t>(m)] += power;
                }
            }
        }
        for (int m = 1; m <= max_m; ++m)
            if (hook_sum[static_cast<std::size_t>(m)] != part_sum[static_cast<std::size_t>(m)]) {
                r.passed = false;
                r.detail = "sum h^m != sum lambda_j^{m+1} at n=" + std::to_string(n) + " m=" + std::to_string(m);
                return r;
            }
    }
    r.detail = "n<=" + std::to_string(max_n) + ", m<=" + std::to_string(max_m);
    return r;
}

std::vector<CheckResult> run_verification(VerifyLevel level, int threads, std::ostream& report) {
    const bool full = level == VerifyLevel::full;
    std::vector<CheckResult> results;
    results.push_back(timed([&] { return check_han_identity(full ? 12 : 10, 4); }, report));
    results.push_back(timed([&] { return check_lemma1(full ? 12 : 10, 4); }, report));
    results.push_back(timed([&] { return check_generating_function(full ? 12 : 10, 4, full ? 2000 : 300); }, report));
    results.push_back(timed(check_worked_example, report));
    results.push_back(timed([&] { return check_partition_count(full ? 40 : 25); }, report));
    results.push_back(timed([&] { return check_tableaux(full ? 10 : 8); }, report));
    results.push_back(timed(check_saddle, report));
    results.push_back(timed(check_hardy_ramanujan, report));
    results.push_back(timed(check_limit_law, report));
    if (full) {
        results.push_back(timed([] { return check_moment_asymptotic(2000); }, report));
        results.push_back(timed([&] { return check_sampler_uniformity(threads); }, report));
        results.push_back(timed([&] { return check_monte_carlo(threads); }, report));
        results.push_back(timed([&] { return check_determinism(threads); }, report));
    }
    return results;
}

} // namespace hooklaw
