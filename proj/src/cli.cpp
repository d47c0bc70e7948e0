#include "hooklaw/cli.hpp"

#include "hooklaw/asymptotics.hpp"
#include "hooklaw/enumeration.hpp"
#include "hooklaw/errors.hpp"
#include "hooklaw/limit_law.hpp"
#include "hooklaw/sampler.hpp"
#include "hooklaw/series.hpp"
#include "hooklaw/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <thread>

namespace hooklaw::cli {

namespace {

using Json = nlohmann::ordered_json;

// Doubles are emitted with 12 significant digits; non-finite values as null.
Json real(double x) {
    if (!std::isfinite(x)) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string real_text(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct Options {
    int n = 0;
    int m = -1;
    std::int64_t count = 0;
    std::uint64_t seed = 1;
    std::string algo;
    int threads = 0;
    int hist = 0;
    int grid = 0;
    int points = 0;
    std::string out_file;
    std::string level = "quick";
};

std::optional<Algorithm> algorithm_option(const Options& o) {
    if (o.algo.empty()) return std::nullopt;
    return parse_algorithm(o.algo);
}

void require_n(const Options& o, int minimum = 1) {
    if (o.n < minimum) throw ConfigError("--n must be at least " + std::to_string(minimum));
}

int run_pn(const Options& o, std::ostream& out) {
    require_n(o, 0);
    out << decimal(partition_count(o.n)) << "\n";
    return kOk;
}

int run_exact(const Options& o, std::ostream& out) {
    require_n(o);
    const int max_m = o.m < 0 ? 4 : o.m;
    if (o.n > kDefaultEnumerationCap)
        throw ResourceError("exact: n = " + std::to_string(o.n) + " exceeds the enumeration cap of " +
                            std::to_string(kDefaultEnumerationCap));
    const PowerSums sums = power_sums(o.n, max_m + 1, resolve_threads(o.threads));
    Json ey = Json::array(), ez = Json::array();
    for (int m = 0; m <= max_m; ++m) {
        Rational y(sums.part_power[static_cast<std::size_t>(m)], sums.partitions);
        Rational z(sums.hook_power[static_cast<std::size_t>(m)], sums.partitions * o.n);
        y.canonicalize();
        z.canonicalize();
        ey.push_back(decimal(y));
        ez.push_back(decimal(z));
    }
    Json hist = Json::object();
    for (const auto& [h, w] : exact_hook_distribution(o.n).weights) hist[std::to_string(h)] = decimal(w);
    Json doc;
    doc["n"] = o.n;
    doc["p_n"] = decimal(sums.partitions);
    doc["E_Y"] = ey;
    doc["E_Z"] = ez;
    doc["hook_hist"] = hist;
    out << doc.dump(2) << "\n";
    return kOk;
}

int run_gf_check(const Options& o, std::ostream& out) {
    require_n(o);
    const int m = o.m < 0 ? 2 : o.m;
    const MomentSeries series(m, o.n);
    bool ok = true;
    out << "n\tp_n\tcoefficient\tE_Y\toracle\n";
    for (int n = 1; n <= o.n; ++n) {
        const BigInt coeff = series.coefficient(n);
        std::string verdict;
        if (n <= kDefaultEnumerationCap) {
            const PowerSums sums = power_sums(n, m);
            const bool match = sums.part_power[static_cast<std::size_t>(m)] == coeff && sums.partitions == series.euler()[n];
            verdict = match ? "exact-match" : "MISMATCH";
            ok = ok && match;
        } else if (m == 1) {
            const bool match = coeff == series.euler()[n] * n;
            verdict = match ? "identity-match" : "MISMATCH";
            ok = ok && match;
        } else {
            verdict = "beyond-enumeration-cap";
        }
        out << n << "\t" << decimal(series.euler()[n]) << "\t" << decimal(coeff) << "\t"
            << decimal(series.expectation(n)) << "\t" << verdict << "\n";
    }
    return ok ? kOk : kTolerance;
}

int run_asym(const Options& o, std::ostream& out) {
    require_n(o);
    const SaddleSolution sol = solve_saddle(o.n);
    const double expansion = d_n_expansion(o.n);
    const double log_hr = log_hardy_ramanujan(o.n);
    const double log_hayman = log_hayman_pn_estimate(o.n);
    const double nn = static_cast<double>(o.n);
    Json doc;
    doc["n"] = o.n;
    doc["d_n"] = real(sol.d_n);
    doc["d_n_expansion"] = real(expansion);
    doc["d_n_gap"] = real(std::abs(sol.d_n - expansion));
    doc["a_val"] = real(sol.a_val);
    doc["b_val"] = real(sol.b_val);
    doc["residual"] = real(sol.residual);
    doc["b_over_n_three_halves"] = real(sol.b_val / std::pow(nn, 1.5));
    doc["b_limit_constant"] = real(2.0 * std::sqrt(6.0) / std::numbers::pi);
    doc["hr"] = real(std::exp(log_hr));
    doc["log_hr"] = real(log_hr);
    doc["hayman"] = real(std::exp(log_hayman));
    doc["log_hayman"] = real(log_hayman);
    if (o.n <= kExactDefaultMaxN) {
        const BigInt p = partition_count(o.n);
        const double log_p = log_of(p);
        doc["p_exact"] = decimal(p);
        doc["hr_ratio"] = real(std::exp(log_hr - log_p));
        doc["hayman_ratio"] = real(std::exp(log_hayman - log_p));
    }
    out << doc.dump(2) << "\n";
    return kOk;
}

int run_shape(const Options& o, std::ostream& out) {
    ShapeGrid grid;
    if (o.points > 0) grid.points = o.points;
    out << "t,s\n";
    for (double t : grid.values()) out << real_text(t) << "," << real_text(limit_shape(t)) << "\n";
    return kOk;
}

int run_sample(const Options& o, std::ostream& out, std::ostream& err) {
    require_n(o);
    const std::int64_t count = o.count > 0 ? o.count : 1000;
    const SamplerConfig cfg = make_sampler_config(o.n, o.seed, algorithm_option(o));
    FristedtStats stats;
    const auto obs = sample_hooks(cfg, count, resolve_threads(o.threads), &stats);
    if (cfg.algorithm == Algorithm::fristedt_rejection)
        err << "fristedt acceptance rate " << real_text(stats.acceptance_rate()) << " over " << stats.trials
            << " trials\n";
    if (o.hist > 0) {
        constexpr double lo = 0.0, hi = 10.0;
        std::vector<std::int64_t> counts(static_cast<std::size_t>(o.hist), 0);
        std::int64_t overflow = 0;
        for (const auto& h : obs) {
            const auto bin = static_cast<std::int64_t>((h.scaled - lo) / (hi - lo) * o.hist);
            if (bin >= o.hist)
                ++overflow;
            else
                ++counts[static_cast<std::size_t>(bin)];
        }
        Json doc;
        doc["n"] = o.n;
        doc["count"] = count;
        doc["seed"] = std::to_string(o.seed);
        doc["algo"] = std::string(to_string(cfg.algorithm));
        doc["bins"] = o.hist;
        doc["lo"] = lo;
        doc["hi"] = hi;
        doc["counts"] = counts;
        doc["overflow"] = overflow;
        out << doc.dump(2) << "\n";
        return kOk;
    }
    out << "trial,hook,scaled\n";
    for (std::size_t i = 0; i < obs.size(); ++i) out << i << "," << obs[i].hook << "," << real_text(obs[i].scaled) << "\n";
    return kOk;
}

int run_ks(const Options& o, std::ostream& out) {
    require_n(o);
    const std::int64_t count = o.count > 0 ? o.count : 10000;
    const SamplerConfig cfg = make_sampler_config(o.n, o.seed, algorithm_option(o));
    const auto obs = sample_hooks(cfg, count, resolve_threads(o.threads));
    std::vector<double> scaled;
    scaled.reserve(obs.size());
    for (const auto& h : obs) scaled.push_back(h.scaled);
    const GofReport report = ks_statistic(scaled, o.n);
    Json doc;
    doc["n"] = report.n;
    doc["sample_count"] = report.sample_count;
    doc["seed"] = std::to_string(o.seed);
    doc["algo"] = std::string(to_string(cfg.algorithm));
    doc["ks_distance"] = real(report.ks_distance);
    doc["ks_location"] = real(report.ks_location);
    doc["reference_line"] = real(report.reference_line);
    doc["mean_scaled"] = real(report.mean_scaled);
    doc["limit_mean"] = real(limit_moment(1));
    doc["moment_ratios"] = Json::array({real(report.moment_ratios[0]), real(report.moment_ratios[1])});
    out << doc.dump(2) << "\n";
    return kOk;
}

int run_limit(const Options& o, std::ostream& out) {
    const int k = o.grid > 1 ? o.grid : 241;
    constexpr double u_max = 12.0;
    out << "u,density,cdf\n";
    for (int i = 0; i < k; ++i) {
        const double u = u_max * i / (k - 1);
        out << real_text(u) << "," << real_text(LimitLaw::density(u == 0.0 ? 1e-300 : u)) << ","
            << real_text(LimitLaw::cdf(u)) << "\n";
    }
    return kOk;
}

int run_verify(const Options& o, std::ostream& out) {
    VerifyLevel level;
    if (o.level == "quick")
        level = VerifyLevel::quick;
    else if (o.level == "full")
        level = VerifyLevel::full;
    else
        throw ConfigError("--level must be quick or full");
    const auto results = run_verification(level, resolve_threads(o.threads), out);
    std::size_t failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    out << (failed ? "FAIL" : "PASS") << " (" << results.size() - failed << "/" << results.size() << " checks)\n";
    return failed ? kFailure : kOk;
}

} // namespace

std::string RunManifest::to_json() const {
    Json doc;
    doc["subcommand"] = subcommand;
    doc["flags"] = flags;
    doc["seed"] = seed;
    doc["version"] = version;
    doc["wall_seconds"] = real(wall_seconds);
    return doc.dump();
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HOOKLAW_THREADS")) {
        const int value = std::atoi(env);
        if (value > 0) return value;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hook lengths of random cells in random integer partitions", "hooklaw"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--threads", o.threads, "Worker threads (default: $HOOKLAW_THREADS or all cores)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--out", o.out_file, "Write data to FILE instead of stdout");
    };
    auto add_n = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--n", o.n, "Partition size n");
        if (required) opt->required();
    };

    auto* pn = app.add_subcommand("pn", "Exact p(n) by the pentagonal recurrence");
    add_n(pn, true);
    auto* exact = app.add_subcommand("exact", "Exact moments and hook distribution by enumeration");
    add_n(exact, true);
    exact->add_option("--m", o.m, "Highest moment order (default 4)")->check(CLI::NonNegativeNumber);
    auto* gf = app.add_subcommand("gf-check", "Series coefficients [x^n] g F_m against enumeration");
    add_n(gf, true);
    gf->add_option("--m", o.m, "Moment order m >= 1 (default 2)")->check(CLI::PositiveNumber);
    auto* asym = app.add_subcommand("asym", "Saddle point, Hardy-Ramanujan and Hayman estimates");
    add_n(asym, true);
    auto* shape = app.add_subcommand("shape", "Limit shape curve as CSV (t, s)");
    shape->add_option("--points", o.points, "Grid points (default 400)")->check(CLI::PositiveNumber);
    auto* sample = app.add_subcommand("sample", "Sample hook lengths; CSV rows or a histogram");
    add_n(sample, true);
    sample->add_option("--count", o.count, "Number of observations (default 1000)")->check(CLI::PositiveNumber);
    sample->add_option("--seed", o.seed, "64-bit seed (default 1)");
    sample->add_option("--algo", o.algo, "exact or fristedt (default: exact for n <= 100000)");
    sample->add_option("--hist", o.hist, "Emit a histogram with B bins on [0, 10) as JSON")
        ->check(CLI::PositiveNumber);
    auto* ks = app.add_subcommand("ks", "Kolmogorov-Smirnov report against the limit law");
    add_n(ks, true);
    ks->add_option("--count", o.count, "Number of observations (default 10000)")->check(CLI::PositiveNumber);
    ks->add_option("--seed", o.seed, "64-bit seed (default 1)");
    ks->add_option("--algo", o.algo, "exact or fristedt");
    auto* limit = app.add_subcommand("limit", "Limit law density and CDF as CSV (u, density, cdf)");
    limit->add_option("--grid", o.grid, "Grid points on [0, 12] (default 241)")->check(CLI::PositiveNumber);
    auto* verify = app.add_subcommand("verify", "Run the verification battery");
    verify->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    for (auto* sub : {pn, exact, gf, asym, shape, sample, ks, limit, verify}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    RunManifest manifest;
    manifest.subcommand = chosen->get_name();
    for (const CLI::Option* opt : chosen->get_options())
        if (opt->count() > 0 && !opt->get_name().empty() && opt->get_name() != "--help")
            manifest.flags[opt->get_name()] = opt->as<std::string>();
    manifest.seed = std::to_string(o.seed);

    const auto start = std::chrono::steady_clock::now();
    std::ofstream file;
    if (!o.out_file.empty()) {
        file.open(o.out_file, std::ios::binary);
        if (!file) {
            err << "hooklaw: cannot open " << o.out_file << " for writing\n";
            return kUsage;
        }
    }
    std::ostream& data = o.out_file.empty() ? out : file;

    int code = kOk;
    try {
        const std::string& name = manifest.subcommand;
        if (name == "pn") code = run_pn(o, data);
        else if (name == "exact") code = run_exact(o, data);
        else if (name == "gf-check") code = run_gf_check(o, data);
        else if (name == "asym") code = run_asym(o, data);
        else if (name == "shape") code = run_shape(o, data);
        else if (name == "sample") code = run_sample(o, data, err);
        else if (name == "ks") code = run_ks(o, data);
        else if (name == "limit") code = run_limit(o, data);
        else if (name == "verify") code = run_verify(o, data);
    } catch (const ConfigError& e) {
        err << "hooklaw: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "hooklaw: " << e.what() << "\n";
        return kUsage;
    } catch (const ToleranceError& e) {
        err << "hooklaw: " << e.what() << "\n";
        return kTolerance;
    } catch (const ResourceError& e) {
        err << "hooklaw: " << e.what() << "\n";
        return kTolerance;
    } catch (const std::exception& e) {
        err << "hooklaw: internal error: " << e.what() << "\n";
        return kFailure;
    }
    data.flush();

    manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.out_file.empty()) {
        std::ofstream(o.out_file + ".manifest.json") << manifest.to_json() << "\n";
    } else {
        err << manifest.to_json() << "\n";
    }
    return code;
}

} // namespace hooklaw::cli
