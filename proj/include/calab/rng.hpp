#pragma once

#include <cstdint>

namespace calab {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Hashes (seed, stream, index) to a 64-bit key; distinct triples give
// statistically independent keys.
constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return mix64(mix64(mix64(seed) ^ stream) + index);
}

// Stream identifiers; each consumer of randomness owns one so that draws
// never collide across purposes.
namespace streams {
inline constexpr std::uint64_t kEvaluation = 0x1001;
inline constexpr std::uint64_t kFitnessDensity = 0x2001;
inline constexpr std::uint64_t kFitnessLogical = 0x2002;
inline constexpr std::uint64_t kGaInit = 0x3001;
inline constexpr std::uint64_t kGaBreed = 0x3002;
inline constexpr std::uint64_t kGaIcSeed = 0x3003;
inline constexpr std::uint64_t kHoldout = 0x4001;
inline constexpr std::uint64_t kSimulate = 0x5001;
}  // namespace streams

// Counter-based substream: the i-th draw is mix64(key + i * gamma), so any
// substream is fully determined by its key and never shares state with
// another. All bounded draws are implemented here rather than through
// <random> distributions, whose output is implementation-defined.
class Substream {
public:
    explicit constexpr Substream(std::uint64_t key) : state_(key) {}
    constexpr Substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
        : state_(derive_key(seed, stream, index)) {}

    constexpr std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform on [0, bound); bound must be > 0. Lemire's multiply-shift with
    // rejection, so the result is exactly uniform.
    std::uint64_t below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform on [0, 1) with 53 bits of resolution.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace calab
