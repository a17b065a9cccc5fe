#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gencase/convergence.hpp"
#include "gencase/delta.hpp"
#include "gencase/reductions.hpp"

namespace gencase {
namespace reductions {

/// Parameters of one security sweep. The thresholds of the checks are
/// n^-c for per-input success probabilities, n^c for achievement ratios,
/// and 1/p(n) = n^-p_degree for sphere densities; finite experiments can
/// only probe one (c, p) cell of the quantifier grid at a time, and the
/// report says which one it probed.
struct DefinitionCheckParams {
    double c = 1.0;
    double p_degree = 2.0;
    strata::Mode mode = strata::Mode::exact;
    harness::FuelSchedule fuel = harness::FuelSchedule::poly(4.0, 3.0);
    uint64_t trials = 200;           // sampled mode: tapes per input
    uint64_t density_samples = 200;  // sampled mode: inputs per sphere
    uint64_t seed = 0;
    uint32_t sphere_cap = strata::kDefaultSphereCap;
    uint32_t tape_cap = harness::kDefaultTapeCap;
    double confidence = kDefaultConfidence;
};

/// Per-sphere measurements of the four hardness conditions:
///   strong/PPT:     density of { x : delta(x) > n^-c } must stay < 1/p(n)
///   weak/PPT:       density of { x : delta(x) < n^-c } must be >= 1/p(n)
///   strong/partial: density of { x : ratio(x) <= n^c } must stay < 1/p(n)
///   weak/partial:   density of { x : ratio(x) > n^c } must be >= 1/p(n)
/// Note the per-input thresholds are strict on both sides, so an input
/// sitting exactly at delta = n^-c belongs to neither the success set nor
/// the low-delta set; exact mode resolves these boundaries exactly.
struct SphereCheck {
    uint32_t n = 0;
    uint64_t fuel = 0;
    uint64_t plan_repetitions = 0;  // ceil(n^3c)
    double plan_epsilon = 0.0;      // 2^-((n+2)/2)
    double delta_threshold = 0.0;   // n^-c
    double density_threshold = 0.0; // 1/p(n)

    strata::DensityValue success_density;     // { delta > n^-c }
    strata::DensityValue low_delta_density;   // { delta < n^-c }
    strata::DensityValue fast_ratio_density;  // { ratio <= n^c }
    strata::DensityValue slow_ratio_density;  // { ratio > n^c }

    bool strong_ppt_violated = false;
    bool weak_ppt_consistent = false;
    bool strong_partial_violated = false;
    bool weak_partial_consistent = false;
};

struct DefinitionCheckReport {
    std::string candidate;
    std::string inverter;
    DefinitionCheckParams params;
    std::vector<SphereCheck> spheres;

    /// Convergence of the success-set density profile; meaningful when the
    /// sweep covers at least 4 radii. A strongly-negligible success
    /// profile is what a strong one-way function demands of this inverter.
    bool has_classification = false;
    strata::ConvergenceReport success_profile;

    bool strong_ppt_violated = false;      // at any tested n
    bool weak_ppt_consistent = false;      // at every tested n
    bool strong_partial_violated = false;  // at any tested n
    bool weak_partial_consistent = false;  // at every tested n
    std::vector<uint32_t> strong_ppt_violations;
    std::vector<uint32_t> strong_partial_violations;
};

/// Sweeps the spheres in `radii`, measuring for each input how often the
/// inverter wins and how long it runs, then aggregates the four hardness
/// conditions above and classifies the success-density profile.
DefinitionCheckReport definition_check(const harness::InverterProgram& a,
                                       const harness::CandidateFunction& f,
                                       const std::vector<uint32_t>& radii,
                                       const DefinitionCheckParams& params = {});

} // namespace reductions
} // namespace gencase
