#pragma once

#include <cmath>
#include <cstdint>

namespace envelope {

// Deterministic random stream (SplitMix64). The distributions are written
// out by hand so a given seed produces the identical sequence on every
// platform and build, which the std::<random> distributions do not promise.
//
// Substream contract: substream(seed, k) starts from mix(mix(seed) + k).
// Distinct indices give decorrelated streams, and any partition of work
// across substreams reproduces the single-stream results.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    static RandomStream substream(std::uint64_t seed, std::uint64_t index) {
        RandomStream s(mix(mix(seed) + index));
        return s;
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe under log().
    double next_open_unit() { return 1.0 - next_double(); }

    // True with probability exactly 1/2 (top bit of one draw).
    bool next_coin() { return (next_u64() >> 63) != 0; }

    // True with probability p for p in [0, 1]; exact at both endpoints.
    bool next_bernoulli(double p) { return next_double() < p; }

    double next_uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

    // Box-Muller; consumes exactly two draws.
    double next_standard_normal() {
        double u1 = next_open_unit();
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace envelope
