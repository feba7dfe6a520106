#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace deformlab {

/// Counter-based generator: the i-th output word is a pure function of
/// (seed, i), so any index range can be evaluated in any order or in
/// parallel with bit-identical results.
///
/// Construction (SplitMix64 finalizer, Steele/Lea/Flood constants, frozen):
///   base    = mix(seed + 0x9E3779B97F4A7C15)
///   word(i) = mix(base + (i + 1) * 0x9E3779B97F4A7C15)
///   mix(z)  = h(h(h(z, 30, 0xBF58476D1CE4E5B9), 27, 0x94D049BB133111EB), 31, 1)
///   h(z,s,m) = (z ^ (z >> s)) * m
struct CounterRng {
    std::uint64_t base;

    explicit CounterRng(std::uint64_t seed) : base(mix(seed + golden)) {}

    static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t word(std::uint64_t counter) const {
        return mix(base + (counter + 1) * golden);
    }

    /// Uniform in [0, 1), 53 random bits.
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1]; safe as a log() argument.
    double uniform_pos(std::uint64_t counter) const {
        return static_cast<double>((word(counter) >> 11) + 1) * 0x1.0p-53;
    }

    /// Two independent standard normals from counters (counter, counter + 1)
    /// via Box-Muller.
    std::pair<double, double> gaussian_pair(std::uint64_t counter) const {
        const double u1 = uniform_pos(counter);
        const double u2 = uniform(counter + 1);
        const double radius = std::sqrt(-2 * std::log(u1));
        const double angle = 2 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }
};

}  // namespace deformlab
