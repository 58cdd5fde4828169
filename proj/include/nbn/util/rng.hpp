#pragma once

#include <cstdint>
#include <random>

namespace nbn::util {

/// splitmix64 step; used to derive independent RNG substreams from one seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Substream RNG: stream(seed, tag) is independent of stream(seed, tag') for
/// tag != tag'. Results depend only on (seed, tag), never on thread layout,
/// which keeps parallel runs byte-reproducible.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t tag) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ tag));
}

/// Unbiased draw from {0, .., n-1}. Fully specified (rejection sampling on
/// raw 64-bit output), so results never depend on library internals.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double real01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// FNV-1a over a byte range; used for content fingerprints in file headers.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

template <typename T>
std::uint64_t fnv1a_value(const T& v, std::uint64_t h = 0xcbf29ce484222325ULL) {
    return fnv1a(&v, sizeof(T), h);
}

} // namespace nbn::util
