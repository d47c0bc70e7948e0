#include "hooklaw/enumeration.hpp"
#include "hooklaw/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hooklaw;

namespace {

std::vector<std::vector<int>> stream_all(int n) {
    std::vector<std::vector<int>> out;
    for (PartitionStream it(n); !it.done(); it.advance()) out.emplace_back(it.current().begin(), it.current().end());
    return out;
}

} // namespace

TEST_CASE("partition_count values") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(100) == 190569292);
    CHECK(partition_count(10) == 42);
    CHECK_THROWS_AS(partition_count(-1), DomainError);
    const PartitionFunctionTable table(30);
    CHECK(table.divisor_sum(12) == 28);
    CHECK_THROWS_AS(table[31], DomainError);
}

TEST_CASE("recurrence agrees with enumeration") {
    const PartitionFunctionTable table(40);
    for (int n = 0; n <= 40; ++n) {
        std::uint64_t count = 0;
        for (PartitionStream it(n); !it.done(); it.advance()) ++count;
        CHECK(table[n] == static_cast<unsigned long>(count));
    }
}

TEST_CASE("enumeration order is reverse lexicographic") {
    CHECK(stream_all(3) == std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(stream_all(1) == std::vector<std::vector<int>>{{1}});
    CHECK(enumerate_all(4).size() == 5);
    CHECK(enumerate_all(0).size() == 1);
    for (int n = 1; n <= 16; ++n) CHECK(stream_all(n) == oracle::partitions(n));
}

TEST_CASE("largest-part blocks tile the enumeration") {
    const int n = 15;
    std::vector<std::vector<int>> joined;
    for (auto [lo, hi] : {std::pair{11, 15}, {6, 10}, {3, 5}, {1, 2}})
        for (PartitionStream it(n, lo, hi); !it.done(); it.advance())
            joined.emplace_back(it.current().begin(), it.current().end());
    CHECK(joined == stream_all(n));
    CHECK(PartitionStream(5, 6, 9).done());
}

TEST_CASE("enumerate_all cap") {
    CHECK_THROWS_AS(enumerate_all(61), ResourceError);
    CHECK_NOTHROW(enumerate_all(20, 20));
}

TEST_CASE("exact moments") {
    CHECK(moment_Y(3, 2) == Rational(17, 3));
    CHECK(moment_Y(2, 2) == 3);
    CHECK(moment_Z(2, 1) == Rational(3, 2));
    CHECK(moment_Z(3, 1) == Rational(17, 9));
    for (int n = 1; n <= 14; ++n) {
        CHECK(moment_Y(n, 1) == n);
        CHECK(moment_Z(n, 0) == 1);
    }
    CHECK_THROWS_AS(moment_Y(0, 1), DomainError);
    CHECK_THROWS_AS(moment_Z(0, 1), DomainError);
}

TEST_CASE("Han identity and its expectation form") {
    for (int n = 1; n <= 12; ++n) {
        const PowerSums sums = power_sums(n, 5);
        for (int m = 1; m <= 4; ++m) {
            CHECK(sums.hook_power[static_cast<std::size_t>(m)] == sums.part_power[static_cast<std::size_t>(m + 1)]);
            CHECK(moment_Z(n, m) == moment_Y(n, m + 1) / n);
        }
    }
}

TEST_CASE("power sums are independent of the thread split") {
    const PowerSums serial = power_sums(22, 3, 1);
    const PowerSums split = power_sums(22, 3, 4);
    CHECK(serial.partitions == split.partitions);
    CHECK(serial.part_power == split.part_power);
    CHECK(serial.hook_power == split.hook_power);
}

TEST_CASE("exact hook distribution") {
    auto d1 = exact_hook_distribution(1);
    CHECK(d1.weights == std::map<int, BigInt>{{1, 1}});
    auto d2 = exact_hook_distribution(2);
    CHECK(d2.weights == std::map<int, BigInt>{{1, 2}, {2, 2}});
    CHECK(d2.probability(1) == Rational(1, 2));
    auto d3 = exact_hook_distribution(3);
    CHECK(d3.weights == std::map<int, BigInt>{{1, 4}, {2, 2}, {3, 3}});
    CHECK(d3.total() == 9);

    for (int n = 1; n <= 12; ++n) {
        const auto dist = exact_hook_distribution(n);
        CHECK(dist.total() == partition_count(n) * n);
        CHECK(dist.weights.rbegin()->first <= n);
        const auto brute = oracle::hook_histogram(n);
        REQUIRE(brute.size() == dist.weights.size());
        for (const auto& [h, w] : brute) CHECK(dist.weights.at(h) == static_cast<unsigned long>(w));
        for (int m = 0; m <= 3; ++m) CHECK(dist.moment(m) == moment_Z(n, m));
    }
    CHECK_THROWS_AS(exact_hook_distribution(61), ResourceError);
}

TEST_CASE("tableaux counts") {
    CHECK(tableaux_count(Partition({2, 1})) == 2);
    CHECK(tableaux_count(Partition({9})) == 1);
    CHECK(tableaux_count(Partition(std::vector<int>(5, 1))) == 1);
    BigInt sum4 = 0;
    for (const auto& lambda : enumerate_all(4)) sum4 += tableaux_count(lambda) * tableaux_count(lambda);
    CHECK(sum4 == 24);
    for (int n = 1; n <= 10; ++n) {
        BigInt sum = 0, fact;
        for (const auto& lambda : enumerate_all(n)) sum += tableaux_count(lambda) * tableaux_count(lambda);
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        CHECK(sum == fact);
    }
    CHECK_THROWS_AS(tableaux_count(Partition{}), DomainError);
}
