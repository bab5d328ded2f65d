#pragma once

#include <cstdint>
#include <random>

namespace semamap {

/// The generator used everywhere. Any seedable generator would do; this one is
/// chosen for its documented, stable output stream.
using Rng = std::mt19937_64;

/// splitmix64 finalizer. Used to derive independent substream seeds from a
/// (base seed, index) pair: substreams for sweep rows and noise trials are
/// mix64(seed, index), so execution order and parallelism cannot change results.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1): top 53 bits of one generator draw. Never returns 1.0.
inline double canonical(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [-half_width, +half_width].
inline double uniform_symmetric(Rng& rng, double half_width) {
    return (2.0 * canonical(rng) - 1.0) * half_width;
}

/// Uniform index in [0, n). n must be > 0.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return static_cast<std::size_t>(canonical(rng) * static_cast<double>(n));
}

} // namespace semamap
