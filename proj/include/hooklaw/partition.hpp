#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hooklaw {

// A cell (t, s) of a Young diagram. Rows t are counted from the bottom,
// columns s from the left, both starting at 1 (French convention).
struct Cell {
    int t = 1;
    int s = 1;

    friend bool operator==(const Cell&, const Cell&) = default;
};

// Multiplicity view of a partition: counts[j] = number of parts equal to j.
// Only nonzero multiplicities are stored.
struct Multiplicities {
    std::map<int, int> counts;

    int operator[](int j) const;
    std::int64_t weight() const; // sum of j * l_j
};

// An integer partition stored as weakly decreasing positive parts.
// Immutable once built; the empty partition represents n = 0.
class Partition {
public:
    Partition() = default;

    // Throws DomainError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    // Builds from multiplicities; always valid if every count is nonnegative.
    static Partition from_multiplicities(const Multiplicities& mult);

    // Parses the canonical text form "5,4,3,3,2,2,2,1". The empty string is
    // the empty partition.
    static Partition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    std::int64_t size() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    // 1-based row length lambda_t; 0 beyond the last row.
    int row(int t) const;
    // 1-based column height lambda*_s, i.e. the number of parts >= s.
    int column(int s) const;

    bool contains(Cell c) const;

    Multiplicities multiplicities() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    struct Trusted {};
    Partition(std::vector<int> parts, std::int64_t n, Trusted)
        : parts_(std::move(parts)), n_(n) {}

    std::vector<int> parts_;
    std::int64_t n_ = 0;
};

Partition conjugate(const Partition& lambda);

// Hook length lambda_t - s + lambda*_s - t + 1. Throws DomainError if c is
// not a cell of lambda.
int hook_length(const Partition& lambda, Cell c);

// All n cells in row-major order starting from row 1. This order defines the
// index map used by the uniform cell sampler.
std::vector<Cell> cells(const Partition& lambda);

// The cell with 1-based position u in cells() order.
Cell cell_at(const Partition& lambda, std::int64_t u);

// Hook lengths of every cell, in cells() order.
std::vector<int> hook_lengths(const Partition& lambda);

// Upper boundary X(t) = sum_{j >= t} l_j of the diagram. Throws on t < 0.
int profile(const Partition& lambda, double t);

} // namespace hooklaw
