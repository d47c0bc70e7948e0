#include "hooklaw/sampler.hpp"

#include "hooklaw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <thread>

namespace hooklaw {

Algorithm default_algorithm(int n) {
    return n <= kExactDefaultMaxN ? Algorithm::exact_recursive : Algorithm::fristedt_rejection;
}

std::string_view to_string(Algorithm a) {
    return a == Algorithm::exact_recursive ? "exact" : "fristedt";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "exact" || name == "exact-recursive") return Algorithm::exact_recursive;
    if (name == "fristedt" || name == "fristedt-rejection") return Algorithm::fristedt_rejection;
    throw ConfigError("unknown sampling algorithm \"" + std::string(name) + "\"");
}

void SamplerConfig::validate() const {
    if (n < 1) throw ConfigError("sampler: n must be at least 1");
    if (algorithm == Algorithm::exact_recursive && (!table || table->max_n() < n))
        throw ConfigError("sampler: exact-recursive needs a partition table covering p(" +
                          std::to_string(n) + ")");
    if (max_trials == 0) throw ConfigError("sampler: max_trials must be positive");
}

SamplerConfig make_sampler_config(int n, std::uint64_t seed, std::optional<Algorithm> algorithm) {
    SamplerConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    cfg.algorithm = algorithm.value_or(default_algorithm(n));
    if (n < 1) throw ConfigError("sampler: n must be at least 1");
    if (cfg.algorithm == Algorithm::exact_recursive)
        cfg.table = std::make_shared<const PartitionFunctionTable>(n);
    return cfg;
}

double scale_hook(int n, int hook) {
    return std::numbers::pi * static_cast<double>(hook) / std::sqrt(6.0 * static_cast<double>(n));
}

namespace {

// Uniform big integer in [0, bound) by masked rejection.
void uniform_below(BigInt& out, const BigInt& bound, TrialRng& rng, std::vector<std::uint64_t>& words) {
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    words.resize((bits + 63) / 64);
    do {
        for (auto& w : words) w = rng.next();
        mpz_import(out.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
        mpz_fdiv_r_2exp(out.get_mpz_t(), out.get_mpz_t(), bits);
    } while (out >= bound);
}

} // namespace

Partition sample_exact_recursive(int n, const PartitionFunctionTable& table, TrialRng& rng) {
    if (n < 0 || n > table.max_n())
        throw ConfigError("exact-recursive sampler: table does not cover n = " + std::to_string(n));
    std::vector<int> parts;
    std::vector<std::uint64_t> words;
    BigInt remaining, bound;
    int m = n;
    while (m > 0) {
        bound = table[m] * static_cast<unsigned long>(m);
        uniform_below(remaining, bound, rng, words);
        // The pairs (d, j) with d j = s carry total weight sigma(s) p(m - s), and
        // m p(m) = sum_s sigma(s) p(m - s). Locate s first, then d within it.
        int s = 0;
        for (int k = 1; k <= m; ++k) {
            mpz_submul_ui(remaining.get_mpz_t(), table[m - k].get_mpz_t(),
                          static_cast<unsigned long>(table.divisor_sum(k)));
            if (sgn(remaining) < 0) {
                s = k;
                break;
            }
        }
        if (!s) throw InvariantError("exact-recursive sampler: pair weights do not sum to m p(m)");
        // d | s with probability d / sigma(s).
        auto offset = static_cast<std::int64_t>(rng.below(table.divisor_sum(s)));
        int d = 0;
        for (int c = 1; c <= s; ++c) {
            if (s % c) continue;
            offset -= c;
            if (offset < 0) {
                d = c;
                break;
            }
        }
        parts.insert(parts.end(), static_cast<std::size_t>(s / d), d);
        m -= s;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition sample_fristedt(int n, TrialRng& rng, std::uint64_t max_trials, FristedtStats* stats) {
    if (n < 1) throw DomainError("fristedt sampler: n must be at least 1");
    const double delta = std::numbers::pi / std::sqrt(6.0 * static_cast<double>(n));
    const auto total = static_cast<std::int64_t>(n);
    // P(l_j >= 1) = w^j < 2^-64 beyond this index.
    const long j_max = static_cast<long>(std::ceil(64.0 * std::numbers::ln2 / delta));
    // Below j_dense every multiplicity is drawn directly; above it, nonzero
    // multiplicities are rare and located by thinning within blocks.
    const long j_dense = std::min<long>(j_max, static_cast<long>(std::ceil(4.0 / delta)));
    const long block = std::max<long>(1, static_cast<long>(std::ceil(1.0 / delta)));

    std::vector<std::pair<long, std::int64_t>> nonzero;
    for (std::uint64_t trial = 1; trial <= max_trials; ++trial) {
        nonzero.clear();
        std::int64_t sum = 0;
        auto record = [&](long j, std::int64_t l) {
            nonzero.emplace_back(j, l);
            sum += static_cast<std::int64_t>(j) * l;
        };

        for (long j = 2; j <= j_dense && sum <= total; ++j) {
            // Geometric: P(l >= k) = w^{jk}.
            const auto l = static_cast<std::int64_t>(-std::log(rng.uniform()) / (static_cast<double>(j) * delta));
            if (l > 0) record(j, l);
        }
        for (long a = j_dense + 1; a <= j_max && sum <= total; a += block) {
            const double q = std::exp(-static_cast<double>(a) * delta);
            const double log_miss = std::log1p(-q);
            const long end = std::min(a + block, j_max + 1);
            long j = a - 1;
            while (sum <= total) {
                const double skip = std::log(rng.uniform()) / log_miss;
                if (skip >= static_cast<double>(end - j - 1)) break;
                j += 1 + static_cast<long>(skip);
                // Thin the rate-q candidates down to w^j.
                if (rng.uniform() <= std::exp(-static_cast<double>(j - a) * delta)) {
                    const auto extra = static_cast<std::int64_t>(-std::log(rng.uniform()) /
                                                                 (static_cast<double>(j) * delta));
                    record(j, 1 + extra);
                }
            }
        }

        const std::int64_t ones = total - sum;
        const bool accept = ones >= 0 && rng.uniform() <= std::exp(-static_cast<double>(ones) * delta);
        if (!accept) continue;

        if (stats) {
            stats->trials += trial;
            stats->accepted += 1;
        }
        std::vector<int> parts;
        for (auto it = nonzero.rbegin(); it != nonzero.rend(); ++it)
            parts.insert(parts.end(), static_cast<std::size_t>(it->second), static_cast<int>(it->first));
        parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
        Partition lambda(std::move(parts));
        if (lambda.size() != total)
            throw InvariantError("fristedt sampler: accepted draw has size " + std::to_string(lambda.size()));
        return lambda;
    }
    if (stats) stats->trials += max_trials;
    throw ResourceError("fristedt sampler: no acceptance within " + std::to_string(max_trials) +
                        " trials at n = " + std::to_string(n));
}

Partition sample_partition(const SamplerConfig& cfg, TrialRng& rng, FristedtStats* stats) {
    cfg.validate();
    if (cfg.algorithm == Algorithm::exact_recursive) return sample_exact_recursive(cfg.n, *cfg.table, rng);
    return sample_fristedt(cfg.n, rng, cfg.max_trials, stats);
}

Cell sample_cell(const Partition& lambda, TrialRng& rng) {
    if (lambda.empty()) throw DomainError("sample_cell: the empty partition has no cells");
    const auto u = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(lambda.size()))) + 1;
    return cell_at(lambda, u);
}

namespace {

// Runs body(trial, stats) for trial in [0, count), contiguous chunks per worker.
void run_trials(std::int64_t count, int threads, FristedtStats* stats,
                const std::function<void(std::int64_t, FristedtStats&)>& body) {
    if (count < 1) throw DomainError("sample count must be at least 1");
    threads = static_cast<int>(std::clamp<std::int64_t>(threads, 1, count));
    std::vector<FristedtStats> per_worker(static_cast<std::size_t>(threads));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    {
        std::vector<std::jthread> workers;
        for (int w = 0; w < threads; ++w) {
            const std::int64_t begin = count * w / threads;
            const std::int64_t end = count * (w + 1) / threads;
            auto work = [&, w, begin, end] {
                try {
                    for (std::int64_t i = begin; i < end; ++i) body(i, per_worker[static_cast<std::size_t>(w)]);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            };
            if (threads == 1)
                work();
            else
                workers.emplace_back(work);
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    if (stats)
        for (const auto& s : per_worker) {
            stats->trials += s.trials;
            stats->accepted += s.accepted;
        }
}

} // namespace

std::vector<HookObservation> sample_hooks(const SamplerConfig& cfg, std::int64_t count, int threads,
                                          FristedtStats* stats) {
    cfg.validate();
    std::vector<HookObservation> out(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
    run_trials(count, threads, stats, [&](std::int64_t i, FristedtStats& local) {
        TrialRng rng(cfg.seed, static_cast<std::uint64_t>(i));
        const Partition lambda = sample_partition(cfg, rng, &local);
        const int h = hook_length(lambda, sample_cell(lambda, rng));
        out[static_cast<std::size_t>(i)] = {cfg.n, h, scale_hook(cfg.n, h)};
    });
    return out;
}

std::vector<Partition> sample_partitions(const SamplerConfig& cfg, std::int64_t count, int threads,
                                         FristedtStats* stats) {
    cfg.validate();
    std::vector<Partition> out(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
    run_trials(count, threads, stats, [&](std::int64_t i, FristedtStats& local) {
        TrialRng rng(cfg.seed, static_cast<std::uint64_t>(i));
        out[static_cast<std::size_t>(i)] = sample_partition(cfg, rng, &local);
    });
    return out;
}

} // namespace hooklaw
