/*
 * rng.hpp — deterministic, platform-independent random streams.
 *
 * splitmix64 counters keyed by (seed, stream, index) make every generated
 * field a pure function of its labels, so ensembles are reproducible
 * bitwise regardless of evaluation order or thread count.
 */

#pragma once

#include <cmath>
#include <cstdint>

namespace qglab {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_keys(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

// uniform in (0, 1]; never returns 0 so log() is safe
inline double uniform01(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

// standard normal pair via Box-Muller on two counter values
struct GaussPair {
    double a, b;
};

inline GaussPair gauss_pair(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    double u1 = uniform01(mix_keys(seed, stream, 2 * index));
    double u2 = uniform01(mix_keys(seed, stream, 2 * index + 1));
    double r = std::sqrt(-2.0 * std::log(u1));
    double ang = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(ang), r * std::sin(ang)};
}

}  // namespace qglab
