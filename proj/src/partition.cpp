#include "hooklaw/partition.hpp"

#include "hooklaw/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace hooklaw {

int Multiplicities::operator[](int j) const {
    auto it = counts.find(j);
    return it == counts.end() ? 0 : it->second;
}

std::int64_t Multiplicities::weight() const {
    std::int64_t total = 0;
    for (auto [j, l] : counts) total += static_cast<std::int64_t>(j) * l;
    return total;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw DomainError("partition part " + std::to_string(i + 1) + " is not positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts are not weakly decreasing at position " +
                              std::to_string(i + 1));
        n_ += parts_[i];
    }
}

Partition Partition::from_multiplicities(const Multiplicities& mult) {
    std::vector<int> parts;
    std::int64_t n = 0;
    for (auto it = mult.counts.rbegin(); it != mult.counts.rend(); ++it) {
        auto [j, l] = *it;
        if (l < 0 || (l > 0 && j < 1))
            throw DomainError("invalid multiplicity for part " + std::to_string(j));
        parts.insert(parts.end(), static_cast<std::size_t>(l), j);
        n += static_cast<std::int64_t>(j) * l;
    }
    return Partition(std::move(parts), n, Trusted{});
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto field = text.substr(pos, comma - pos);
        int value = 0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
            throw DomainError("malformed partition text: \"" + std::string(text) + "\"");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::row(int t) const {
    if (t < 1 || t > length()) return 0;
    return parts_[static_cast<std::size_t>(t - 1)];
}

int Partition::column(int s) const {
    if (s < 1) return length();
    // parts_ is decreasing, so {part >= s} is a prefix.
    auto it = std::partition_point(parts_.begin(), parts_.end(), [s](int p) { return p >= s; });
    return static_cast<int>(it - parts_.begin());
}

bool Partition::contains(Cell c) const {
    return c.t >= 1 && c.t <= length() && c.s >= 1 && c.s <= row(c.t);
}

Multiplicities Partition::multiplicities() const {
    Multiplicities m;
    for (int p : parts_) ++m.counts[p];
    return m;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.largest()), 0);
    for (int p : lambda.parts())
        for (int s = 0; s < p; ++s) ++cols[static_cast<std::size_t>(s)];
    return Partition(std::move(cols));
}

int hook_length(const Partition& lambda, Cell c) {
    if (!lambda.contains(c))
        throw DomainError("cell (" + std::to_string(c.t) + "," + std::to_string(c.s) +
                          ") is not in the diagram of " + lambda.to_string());
    return lambda.row(c.t) - c.s + lambda.column(c.s) - c.t + 1;
}

std::vector<Cell> cells(const Partition& lambda) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (int t = 1; t <= lambda.length(); ++t)
        for (int s = 1; s <= lambda.row(t); ++s) out.push_back({t, s});
    return out;
}

Cell cell_at(const Partition& lambda, std::int64_t u) {
    if (u < 1 || u > lambda.size())
        throw DomainError("cell index " + std::to_string(u) + " outside [1, " +
                          std::to_string(lambda.size()) + "]");
    std::int64_t before = 0;
    int t = 1;
    for (int p : lambda.parts()) {
        if (u <= before + p) return {t, static_cast<int>(u - before)};
        before += p;
        ++t;
    }
    throw InvariantError("cell_at: cumulative row lengths do not reach n");
}

std::vector<int> hook_lengths(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (int t = 1; t <= lambda.length(); ++t)
        for (int s = 1; s <= lambda.row(t); ++s)
            out.push_back(lambda.row(t) - s + conj.row(s) - t + 1);
    return out;
}

int profile(const Partition& lambda, double t) {
    if (!(t >= 0.0)) throw DomainError("profile: t must be nonnegative");
    auto parts = lambda.parts();
    auto it = std::partition_point(parts.begin(), parts.end(),
                                   [t](int p) { return static_cast<double>(p) >= t; });
    return static_cast<int>(it - parts.begin());
}

} // namespace hooklaw
