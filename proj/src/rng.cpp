#include "hooklaw/rng.hpp"

namespace hooklaw {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t a = seed;
    std::uint64_t b = trial ^ 0x6a09e667f3bcc909ULL;
    std::uint64_t key = splitmix64(a) ^ rotl(splitmix64(b), 17);
    for (auto& word : state_) word = splitmix64(key);
}

std::uint64_t TrialRng::next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double TrialRng::uniform() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t TrialRng::below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = -bound % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

} // namespace hooklaw
