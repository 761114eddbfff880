#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace heronet {

using Rng = std::mt19937_64;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent stream seed for (base, i, j, ...); used to keep parallel sweeps order-free.
inline std::uint64_t deriveSeed(std::uint64_t base, std::initializer_list<std::uint64_t> stream) {
    std::uint64_t s = mix64(base);
    for (auto x : stream)
        s = mix64(s ^ mix64(x + 0x632be59bd9b4e019ULL));
    return s;
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool bernoulli(Rng &rng, double p) { return uniform01(rng) < p; }

} // namespace heronet
