#pragma once

#include <cstdint>

namespace hooklaw {

// xoshiro256** stream keyed by (seed, trial). Every trial of an experiment
// owns its own stream, so any split of trials across workers reproduces the
// serial output exactly.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next();

    // Uniform on (0, 1] with 53 random bits; never returns 0 so log() is safe.
    double uniform();

    // Uniform integer in [0, bound) by Lemire's multiply-and-reject.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

} // namespace hooklaw
