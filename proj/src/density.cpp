#include "gencase/density.hpp"

#include <atomic>
#include <stdexcept>

#include "gencase/errors.hpp"
#include "gencase/parallel.hpp"
#include "gencase/rng.hpp"

namespace gencase {
namespace strata {

DensityValue exact_density(const InputSet& set, uint32_t n, uint32_t sphere_cap) {
    if (n > sphere_cap) {
        throw CapExceededError("sphere too large for exact mode: n=" + std::to_string(n) +
                               " exceeds cap " + std::to_string(sphere_cap));
    }
    const uint64_t total = uint64_t{1} << n;
    std::atomic<uint64_t> hits{0};
    parallel_for_index(total, [&](uint64_t i) {
        if (set.contains(BitString::from_index(i, n))) hits.fetch_add(1, std::memory_order_relaxed);
    });
    DensityValue v;
    v.n = n;
    v.mode = Mode::exact;
    v.exact = Dyadic(BigUint{hits.load()}, n);
    v.value = v.exact.to_double();
    return v;
}

DensityValue mc_density(const InputSet& set, uint32_t n, uint64_t samples, uint64_t seed,
                        double confidence) {
    if (samples < 1) throw std::invalid_argument("mc_density: samples must be >= 1");
    const uint64_t stream = seed ^ rng::mix64(uint64_t{n} * rng::kC2);
    std::atomic<uint64_t> hits{0};
    parallel_for_index(samples, [&](uint64_t i) {
        BitString x = rng::bits(stream, rng::kDomainDensitySample, i, n);
        if (set.contains(x)) hits.fetch_add(1, std::memory_order_relaxed);
    });
    DensityValue v;
    v.n = n;
    v.mode = Mode::sampled;
    v.value = static_cast<double>(hits.load()) / static_cast<double>(samples);
    v.half_width = hoeffding_half_width(samples, confidence);
    v.confidence = confidence;
    v.samples = samples;
    return v;
}

DensityProfile density_profile(const InputSet& set, const std::vector<uint32_t>& radii, Mode mode,
                               const SamplingParams& params, uint32_t sphere_cap) {
    if (radii.empty()) throw std::invalid_argument("density_profile: empty radius range");
    for (size_t i = 1; i < radii.size(); ++i) {
        if (radii[i] <= radii[i - 1])
            throw std::invalid_argument("density_profile: radii must be strictly ascending");
    }
    DensityProfile profile;
    profile.set_label = set.label();
    profile.estimated_membership = set.estimated_membership();
    profile.points.reserve(radii.size());
    for (uint32_t n : radii) {
        profile.points.push_back(mode == Mode::exact
                                     ? exact_density(set, n, sphere_cap)
                                     : mc_density(set, n, params.samples, params.seed,
                                                  params.confidence));
    }
    return profile;
}

std::vector<uint32_t> radius_range(uint32_t n_min, uint32_t n_max, uint32_t step) {
    if (step == 0) throw std::invalid_argument("radius_range: step must be positive");
    std::vector<uint32_t> out;
    for (uint32_t n = n_min; n <= n_max; n += step) out.push_back(n);
    return out;
}

} // namespace strata
} // namespace gencase
