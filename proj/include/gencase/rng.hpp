#pragma once

#include <cstdint>

#include "gencase/bitstring.hpp"

namespace gencase {

/// Counter-based randomness derivation.
///
/// Every random word is a pure function of (seed, domain, unit, word-index):
///
///     h0 = mix64(seed  ^ domain * C1)
///     h1 = mix64(h0    ^ unit   * C2)
///     w  = mix64(h1    ^ widx   * C3)
///
/// where mix64 is the SplitMix64 finalizer and C1..C3 are the odd constants
/// below. `domain` separates independent uses (density sampling, tape
/// sampling, ...), `unit` is the sample/trial counter within a use. Because
/// no state is carried between units, any scheduling of units over threads
/// produces identical streams.
namespace rng {

inline constexpr uint64_t kDomainDensitySample = 0x01;
inline constexpr uint64_t kDomainDeltaTape = 0x02;
inline constexpr uint64_t kDomainJointPair = 0x03;
inline constexpr uint64_t kDomainVector = 0x04;
inline constexpr uint64_t kDomainPerInput = 0x05;
inline constexpr uint64_t kDomainJointTape = 0x06;

inline constexpr uint64_t kC1 = 0x9E3779B97F4A7C15ULL;
inline constexpr uint64_t kC2 = 0xC2B2AE3D27D4EB4FULL;
inline constexpr uint64_t kC3 = 0x165667B19E3779F9ULL;

inline uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

inline uint64_t word(uint64_t seed, uint64_t domain, uint64_t unit, uint64_t widx) {
    uint64_t h = mix64(seed ^ domain * kC1);
    h = mix64(h ^ unit * kC2);
    return mix64(h ^ widx * kC3);
}

/// Length-n bitstring for unit `unit` of the given stream.
inline BitString bits(uint64_t seed, uint64_t domain, uint64_t unit, uint32_t n) {
    std::vector<uint8_t> out(n);
    uint64_t w = 0;
    for (uint32_t i = 0; i < n; ++i) {
        if (i % 64 == 0) w = word(seed, domain, unit, i / 64);
        out[i] = static_cast<uint8_t>((w >> (i % 64)) & 1);
    }
    return BitString(std::move(out));
}

/// Uniform double in [0, 1) from the unit's first word.
inline double uniform(uint64_t seed, uint64_t domain, uint64_t unit) {
    return static_cast<double>(word(seed, domain, unit, 0) >> 11) * 0x1.0p-53;
}

} // namespace rng
} // namespace gencase
