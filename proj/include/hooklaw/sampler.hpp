#pragma once

#include "hooklaw/enumeration.hpp"
#include "hooklaw/partition.hpp"
#include "hooklaw/rng.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace hooklaw {

enum class Algorithm {
    exact_recursive,    // table-driven, big-integer exact
    fristedt_rejection, // independent geometric multiplicities conditioned on size n
};

// Largest n for which exact_recursive is the default.
inline constexpr int kExactDefaultMaxN = 100'000;

Algorithm default_algorithm(int n);
std::string_view to_string(Algorithm a);
// Accepts "exact" or "fristedt". Throws ConfigError otherwise.
Algorithm parse_algorithm(std::string_view name);

struct SamplerConfig {
    Algorithm algorithm = Algorithm::exact_recursive;
    std::uint64_t seed = 0;
    int n = 1;
    // Required by exact_recursive; must cover p(0..n).
    std::shared_ptr<const PartitionFunctionTable> table;
    std::uint64_t max_trials = 10'000'000; // per accepted Fristedt draw

    void validate() const;
};

// Fills in the algorithm (default_algorithm(n) when unset) and builds the
// p(n) table when the exact algorithm needs one.
SamplerConfig make_sampler_config(int n, std::uint64_t seed,
                                  std::optional<Algorithm> algorithm = std::nullopt);

struct FristedtStats {
    std::uint64_t trials = 0;
    std::uint64_t accepted = 0;

    double acceptance_rate() const {
        return trials ? static_cast<double>(accepted) / static_cast<double>(trials) : 0.0;
    }
};

struct HookObservation {
    int n = 0;
    int hook = 0;
    double scaled = 0.0; // pi * hook / sqrt(6n)
};

double scale_hook(int n, int hook);

// Exactly uniform over Lambda(n). Repeatedly picks a (part d, repetition j)
// pair with probability d p(m - dj) / (m p(m)), appends j copies of d and
// recurses on m - dj. Pure integer arithmetic; the scan visits pairs grouped
// by s = dj in increasing order, so a draw costs O(n) big-integer steps.
Partition sample_exact_recursive(int n, const PartitionFunctionTable& table, TrialRng& rng);

// Exactly uniform over Lambda(n). Draws l_j ~ Geometric(1 - w^j), j >= 2, at
// w = exp(-pi / sqrt(6n)); the remainder k = n - sum_{j>=2} j l_j becomes
// l_1 and the draw is accepted with probability P(l_1 = k) / P(l_1 = 0) = w^k.
// Every accepted draw has sum j l_j = n.
Partition sample_fristedt(int n, TrialRng& rng, std::uint64_t max_trials = 10'000'000,
                          FristedtStats* stats = nullptr);

Partition sample_partition(const SamplerConfig& cfg, TrialRng& rng, FristedtStats* stats = nullptr);

// Uniform over the n cells via a uniform index mapped through cells() order.
Cell sample_cell(const Partition& lambda, TrialRng& rng);

// count independent (partition, cell) experiments. Trial i uses
// TrialRng(cfg.seed, i), so the output does not depend on `threads`.
std::vector<HookObservation> sample_hooks(const SamplerConfig& cfg, std::int64_t count,
                                          int threads = 1, FristedtStats* stats = nullptr);

// Same trial streams as sample_hooks, returning the partitions only.
std::vector<Partition> sample_partitions(const SamplerConfig& cfg, std::int64_t count,
                                         int threads = 1, FristedtStats* stats = nullptr);

} // namespace hooklaw
