#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gencase/hoeffding.hpp"
#include "gencase/input_set.hpp"
#include "gencase/rational.hpp"

namespace gencase {
namespace strata {

enum class Mode { exact, sampled };

inline const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "sampled"; }

/// Exact mode enumerates spheres up to 2^24 strings by default; beyond the
/// cap only sampling is allowed.
inline constexpr uint32_t kDefaultSphereCap = 24;

/// The uniform measure of one set on one sphere. Exact values are dyadic
/// rationals |R cap I_n| / 2^n; sampled values carry a Hoeffding interval.
struct DensityValue {
    uint32_t n = 0;
    Mode mode = Mode::exact;
    Dyadic exact;             // meaningful in exact mode
    double value = 0.0;       // exact.to_double() or the sample mean
    double half_width = 0.0;  // 0 in exact mode
    double confidence = 0.0;  // 0 in exact mode
    uint64_t samples = 0;     // 0 in exact mode
};

/// The density function of one set over an ascending range of radii.
/// `estimated_membership` marks sets whose membership predicate is itself
/// a sampled measurement (see harness::success_set in sampled mode).
struct DensityProfile {
    std::string set_label;
    bool estimated_membership = false;
    std::vector<DensityValue> points;
};

/// |R cap I_n| / 2^n by full enumeration of the sphere.
/// Throws CapExceededError when n > sphere_cap.
DensityValue exact_density(const InputSet& set, uint32_t n,
                           uint32_t sphere_cap = kDefaultSphereCap);

/// Monte Carlo estimate of the spherical density with a two-sided Hoeffding
/// interval. Deterministic for a fixed seed; sample i draws its string from
/// the (seed, density-domain, i) counter stream.
DensityValue mc_density(const InputSet& set, uint32_t n, uint64_t samples, uint64_t seed,
                        double confidence = kDefaultConfidence);

struct SamplingParams {
    uint64_t samples = 1000;
    uint64_t seed = 0;
    double confidence = kDefaultConfidence;
};

/// One DensityValue per radius, all from the same set.
/// Radii must be nonempty and strictly ascending.
DensityProfile density_profile(const InputSet& set, const std::vector<uint32_t>& radii,
                               Mode mode, const SamplingParams& params = {},
                               uint32_t sphere_cap = kDefaultSphereCap);

/// Ascending radius list n_min..n_max with the given stride.
std::vector<uint32_t> radius_range(uint32_t n_min, uint32_t n_max, uint32_t step = 1);

} // namespace strata
} // namespace gencase
