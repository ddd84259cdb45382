#pragma once

#include <complex>
#include <cstdint>

namespace bmocz {

// Counter-based random stream. Each trial derives its own stream from
// (master seed, point index, trial index), so results do not depend on how
// trials are scheduled across threads.
class TrialRng {
public:
    explicit TrialRng(uint64_t seed) : state_(mix(seed)) {}

    static TrialRng for_trial(uint64_t master_seed, uint64_t point_index,
                              uint64_t trial_index) {
        uint64_t s = mix(master_seed ^ mix(point_index + 0x9e3779b97f4a7c15ull));
        return TrialRng(s ^ mix(trial_index + 0xbf58476d1ce4e5b9ull));
    }

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bit() { return (next_u64() >> 63) != 0; }

    // Real normal N(0, sigma^2) pairs via Box-Muller.
    std::complex<double> next_cnormal(double variance);

private:
    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t state_;
};

}  // namespace bmocz
