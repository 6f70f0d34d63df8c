#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace antsynth {

using Rng = std::mt19937_64;

/// Canonical double in [0, 1); exactly one engine draw per sample so the
/// stream layout is the same on every platform.
inline double uniform01(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller. Stateless on purpose: every call consumes
/// a fixed number of draws, which keeps seeded runs reproducible.
inline double gaussian(Rng& rng)
{
    double u1 = 0.0;
    do {
        u1 = uniform01(rng);
    } while (u1 == 0.0);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
}

/// FNV-1a, used to derive per-optimizer sub-seeds from names. std::hash is
/// not specified to be stable, this one is.
inline std::uint64_t fnv1a64(std::string_view s)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace antsynth
