#include "hooklaw/enumeration.hpp"

#include "hooklaw/errors.hpp"

#include <algorithm>
#include <thread>

namespace hooklaw {

PartitionFunctionTable::PartitionFunctionTable(int max_n) {
    if (max_n < 0) throw DomainError("partition table size must be nonnegative");
    values_.resize(static_cast<std::size_t>(max_n) + 1);
    values_[0] = 1;
    BigInt acc;
    for (int n = 1; n <= max_n; ++n) {
        acc = 0;
        // p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            const int g2 = g1 + k;
            if (k % 2) {
                acc += values_[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) acc += values_[static_cast<std::size_t>(n - g2)];
            } else {
                acc -= values_[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) acc -= values_[static_cast<std::size_t>(n - g2)];
            }
        }
        values_[static_cast<std::size_t>(n)] = acc;
    }
    divisor_sums_.assign(static_cast<std::size_t>(max_n) + 1, 0);
    for (int d = 1; d <= max_n; ++d)
        for (int k = d; k <= max_n; k += d) divisor_sums_[static_cast<std::size_t>(k)] += static_cast<std::uint64_t>(d);
}

const BigInt& PartitionFunctionTable::operator[](int n) const {
    if (n < 0 || n > max_n())
        throw DomainError("p(" + std::to_string(n) + ") outside table [0, " +
                          std::to_string(max_n()) + "]");
    return values_[static_cast<std::size_t>(n)];
}

BigInt partition_count(int n) {
    if (n < 0) throw DomainError("partition_count: n must be nonnegative");
    return PartitionFunctionTable(n)[n];
}

PartitionStream::PartitionStream(int n) : PartitionStream(n, 1, n) {}

PartitionStream::PartitionStream(int n, int min_first, int max_first)
    : n_(n), min_first_(std::max(min_first, 1)) {
    if (n < 0) throw DomainError("cannot enumerate partitions of a negative number");
    if (n == 0) return; // one empty partition
    const int first = std::min(max_first, n);
    if (first < min_first_) {
        done_ = true;
        return;
    }
    int rest = n;
    while (rest >= first) {
        parts_.push_back(first);
        rest -= first;
    }
    if (rest > 0) parts_.push_back(rest);
}

void PartitionStream::advance() {
    if (done_) return;
    if (n_ == 0) {
        done_ = true;
        return;
    }
    // Rightmost part greater than one.
    int i = static_cast<int>(parts_.size()) - 1;
    while (i >= 0 && parts_[static_cast<std::size_t>(i)] == 1) --i;
    if (i < 0) {
        done_ = true;
        return;
    }
    const int x = parts_[static_cast<std::size_t>(i)] - 1;
    int rest = static_cast<int>(parts_.size()) - i; // trailing ones plus the unit removed
    parts_.resize(static_cast<std::size_t>(i));
    parts_.push_back(x);
    while (rest > x) {
        parts_.push_back(x);
        rest -= x;
    }
    if (rest > 0) parts_.push_back(rest);
    if (parts_.front() < min_first_) done_ = true;
}

std::vector<Partition> enumerate_all(int n, int cap) {
    if (n > cap)
        throw ResourceError("enumerate_all(" + std::to_string(n) + ") exceeds the cap of " +
                            std::to_string(cap) + "; use PartitionStream to stream instead");
    std::vector<Partition> out;
    for (PartitionStream it(n); !it.done(); it.advance()) out.push_back(it.partition());
    return out;
}

void for_each_partition(int n, const std::function<void(std::span<const int>)>& fn) {
    for (PartitionStream it(n); !it.done(); it.advance()) fn(it.current());
}

namespace {

// Accumulates power sums for the partitions whose largest part is in [lo, hi].
PowerSums power_sums_block(int n, int max_m, int lo, int hi) {
    PowerSums acc;
    acc.n = n;
    acc.part_power.assign(static_cast<std::size_t>(max_m) + 1, 0);
    acc.hook_power.assign(static_cast<std::size_t>(max_m) + 1, 0);

    // Per-value counts keep the big-integer work to O(n * max_m) per block.
    std::vector<std::uint64_t> part_hist(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint64_t> hook_hist(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> cols;
    std::uint64_t count = 0;

    for (PartitionStream it(n, lo, hi); !it.done(); it.advance()) {
        auto parts = it.current();
        ++count;
        cols.assign(parts.empty() ? 0 : static_cast<std::size_t>(parts.front()), 0);
        for (int p : parts) {
            ++part_hist[static_cast<std::size_t>(p)];
            for (int s = 0; s < p; ++s) ++cols[static_cast<std::size_t>(s)];
        }
        for (std::size_t t = 0; t < parts.size(); ++t)
            for (int s = 0; s < parts[t]; ++s)
                ++hook_hist[static_cast<std::size_t>(parts[t] - s + cols[static_cast<std::size_t>(s)] -
                                                     static_cast<int>(t) - 1)];
    }

    acc.partitions = BigInt(static_cast<unsigned long>(count));
    BigInt power, term;
    for (int v = 1; v <= n; ++v) {
        const auto pc = part_hist[static_cast<std::size_t>(v)];
        const auto hc = hook_hist[static_cast<std::size_t>(v)];
        if (pc == 0 && hc == 0) continue;
        const BigInt pcount(static_cast<unsigned long>(pc)), hcount(static_cast<unsigned long>(hc));
        power = 1;
        for (int m = 0; m <= max_m; ++m) {
            acc.part_power[static_cast<std::size_t>(m)] += pcount * power;
            acc.hook_power[static_cast<std::size_t>(m)] += hcount * power;
            power *= v;
        }
    }
    return acc;
}

} // namespace

PowerSums power_sums(int n, int max_m, int threads) {
    if (n < 0 || max_m < 0) throw DomainError("power_sums: n and m must be nonnegative");
    threads = std::max(1, std::min(threads, std::max(n, 1)));
    if (n == 0) {
        PowerSums empty;
        empty.partitions = 1;
        empty.part_power.assign(static_cast<std::size_t>(max_m) + 1, 0);
        empty.hook_power.assign(static_cast<std::size_t>(max_m) + 1, 0);
        return empty;
    }
    if (threads == 1) return power_sums_block(n, max_m, 1, n);

    // Split the largest part range into contiguous blocks; block b owns
    // largest parts in (bounds[b+1], bounds[b]].
    std::vector<PowerSums> partial(static_cast<std::size_t>(threads));
    std::vector<std::jthread> workers;
    for (int b = 0; b < threads; ++b) {
        const int hi = n - (n * b) / threads;
        const int lo = n - (n * (b + 1)) / threads + 1;
        workers.emplace_back([&partial, b, n, max_m, lo, hi] {
            partial[static_cast<std::size_t>(b)] = power_sums_block(n, max_m, lo, hi);
        });
    }
    workers.clear();

    PowerSums total = std::move(partial.front());
    for (std::size_t b = 1; b < partial.size(); ++b) {
        total.partitions += partial[b].partitions;
        for (int m = 0; m <= max_m; ++m) {
            total.part_power[static_cast<std::size_t>(m)] += partial[b].part_power[static_cast<std::size_t>(m)];
            total.hook_power[static_cast<std::size_t>(m)] += partial[b].hook_power[static_cast<std::size_t>(m)];
        }
    }
    return total;
}

Rational moment_Y(int n, int m) {
    if (n < 1) throw DomainError("moment_Y: n must be at least 1");
    if (m < 0) throw DomainError("moment_Y: m must be nonnegative");
    const PowerSums sums = power_sums(n, m);
    Rational q(sums.part_power[static_cast<std::size_t>(m)], sums.partitions);
    q.canonicalize();
    return q;
}

Rational moment_Z(int n, int m) {
    if (n < 1) throw DomainError("moment_Z: n must be at least 1");
    if (m < 0) throw DomainError("moment_Z: m must be nonnegative");
    const PowerSums sums = power_sums(n, m);
    Rational q(sums.hook_power[static_cast<std::size_t>(m)], sums.partitions * n);
    q.canonicalize();
    return q;
}

BigInt ExactHookDistribution::total() const {
    BigInt sum = 0;
    for (const auto& [h, w] : weights) sum += w;
    return sum;
}

Rational ExactHookDistribution::moment(int m) const {
    BigInt num = 0, power;
    for (const auto& [h, w] : weights) {
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(h), static_cast<unsigned long>(m));
        num += w * power;
    }
    Rational q(num, total());
    q.canonicalize();
    return q;
}

Rational ExactHookDistribution::probability(int h) const {
    auto it = weights.find(h);
    if (it == weights.end()) return Rational(0);
    Rational q(it->second, total());
    q.canonicalize();
    return q;
}

ExactHookDistribution exact_hook_distribution(int n, int cap) {
    if (n < 1) throw DomainError("exact_hook_distribution: n must be at least 1");
    if (n > cap)
        throw ResourceError("exact_hook_distribution(" + std::to_string(n) +
                            ") exceeds the enumeration cap of " + std::to_string(cap));
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> cols;
    for (PartitionStream it(n); !it.done(); it.advance()) {
        auto parts = it.current();
        cols.assign(static_cast<std::size_t>(parts.front()), 0);
        for (int p : parts)
            for (int s = 0; s < p; ++s) ++cols[static_cast<std::size_t>(s)];
        for (std::size_t t = 0; t < parts.size(); ++t)
            for (int s = 0; s < parts[t]; ++s)
                ++hist[static_cast<std::size_t>(parts[t] - s + cols[static_cast<std::size_t>(s)] -
                                                static_cast<int>(t) - 1)];
    }
    ExactHookDistribution dist;
    dist.n = n;
    for (int h = 1; h <= n; ++h)
        if (hist[static_cast<std::size_t>(h)])
            dist.weights[h] = BigInt(static_cast<unsigned long>(hist[static_cast<std::size_t>(h)]));
    return dist;
}

BigInt tableaux_count(const Partition& lambda) {
    if (lambda.empty()) throw DomainError("tableaux_count: partition must be nonempty");
    BigInt num, den = 1;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
    for (int h : hook_lengths(lambda)) den *= h;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InvariantError("n! is not divisible by the hook product of " + lambda.to_string());
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

} // namespace hooklaw
