#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace rescurv {

/// One splitmix64 scramble step.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Folds several values into one substream seed. Used to derive independent
/// RNG streams per (pair, sample-block) so results do not depend on how work
/// is scheduled.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x8f1bbcdcbfa53e0bULL;
    for (std::uint64_t p : parts) h = splitmix64(h ^ p);
    return h;
}

/// Uniform draw in [0, bound) by rejection; no modulo bias. Requires an
/// engine producing the full 64-bit range (mt19937_64 does).
template <class Engine>
std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
    for (;;) {
        std::uint64_t r = eng();
        if (r >= threshold) return r % bound;
    }
}

/// Uniform double in [0, 1) with 53-bit resolution.
template <class Engine>
double uniform01(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

} // namespace rescurv
