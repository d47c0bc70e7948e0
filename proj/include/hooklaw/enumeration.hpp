#pragma once

#include "hooklaw/bigint.hpp"
#include "hooklaw/partition.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace hooklaw {

// p(0..N) by Euler's pentagonal-number recurrence, together with the divisor
// sums sigma(1..N) used by the exact sampler. Built once, then read-only.
class PartitionFunctionTable {
public:
    explicit PartitionFunctionTable(int max_n);

    int max_n() const { return static_cast<int>(values_.size()) - 1; }
    const BigInt& operator[](int n) const;
    const std::vector<BigInt>& values() const { return values_; }

    // sigma(k) = sum of the divisors of k, for 1 <= k <= max_n().
    std::uint64_t divisor_sum(int k) const { return divisor_sums_[static_cast<std::size_t>(k)]; }

private:
    std::vector<BigInt> values_;
    std::vector<std::uint64_t> divisor_sums_;
};

BigInt partition_count(int n);

// Streams the partitions of n in reverse-lexicographic order, e.g. for n = 3:
// (3), (2,1), (1,1,1). Restricting the largest part to [min_first, max_first]
// selects a contiguous block of that order, which is how work is split
// between threads.
class PartitionStream {
public:
    explicit PartitionStream(int n);
    PartitionStream(int n, int min_first, int max_first);

    bool done() const { return done_; }
    std::span<const int> current() const { return parts_; }
    void advance();

    // Convenience: materializes the current partition.
    Partition partition() const { return Partition(parts_); }

private:
    int n_;
    int min_first_;
    std::vector<int> parts_;
    bool done_ = false;
};

inline constexpr int kDefaultEnumerationCap = 60;

// Materializes Lambda(n). Throws ResourceError above cap; use PartitionStream
// for larger n.
std::vector<Partition> enumerate_all(int n, int cap = kDefaultEnumerationCap);

// Invokes fn(parts) for every partition of n in stream order.
void for_each_partition(int n, const std::function<void(std::span<const int>)>& fn);

// Exact sums over Lambda(n) used by the moment identities:
//   part_power[m] = sum_lambda sum_j lambda_j^m
//   hook_power[m] = sum_lambda sum_c h(lambda, c)^m
struct PowerSums {
    int n = 0;
    BigInt partitions;
    std::vector<BigInt> part_power;
    std::vector<BigInt> hook_power;
};

PowerSums power_sums(int n, int max_m, int threads = 1);

// Uniform-measure expectation of Y_{m,n} = sum_j lambda_j^m, exactly.
Rational moment_Y(int n, int m);

// Product-measure moment E(Z_n^m), computed directly from hook lengths.
Rational moment_Z(int n, int m);

// Exact law of Z_n: hook length -> number of pairs (lambda, c) with that hook.
struct ExactHookDistribution {
    int n = 0;
    std::map<int, BigInt> weights;

    BigInt total() const;
    Rational moment(int m) const;
    Rational probability(int h) const;
};

ExactHookDistribution exact_hook_distribution(int n, int cap = kDefaultEnumerationCap);

// Number of standard Young tableaux n! / prod h(lambda, c). Throws
// InvariantError if the division is not exact.
BigInt tableaux_count(const Partition& lambda);

} // namespace hooklaw
