#pragma once

#include <cmath>
#include <cstdint>

namespace gencase {

inline constexpr double kDefaultConfidence = 0.99;

/// Two-sided Hoeffding half-width for a mean of [0,1] samples:
/// P(|estimate - truth| >= w) <= 2 exp(-2 n w^2) = 1 - confidence.
/// Distribution-free, so it is valid for any predicate or success indicator.
inline double hoeffding_half_width(uint64_t samples, double confidence = kDefaultConfidence) {
    return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(samples)));
}

} // namespace gencase
