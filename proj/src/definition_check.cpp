#include "gencase/definition_check.hpp"

#include <cmath>

#include "gencase/errors.hpp"
#include "gencase/parallel.hpp"
#include "gencase/rng.hpp"

namespace gencase {
namespace reductions {

namespace {

/// ratio = T / (s/2^t) <= n^c  <=>  T * 2^t <= s * n^c, exactly for
/// integral c. A run set with no halting run or zero successes has an
/// infinite ratio and fails every finite threshold.
bool ratio_at_most_poly(const harness::DeltaEstimate& est, uint32_t n, double c) {
    if (!est.saw_halting || est.counts.success == 0) return false;
    const double rounded = std::round(c);
    if (est.mode == strata::Mode::exact && std::abs(c - rounded) < 1e-12 && rounded >= 0 &&
        rounded <= 4096) {
        // Cross-multiplied against the reduced fraction; same value.
        BigUint lhs = BigUint{est.max_halting_steps} << est.exact.log2_denominator();
        BigUint rhs = est.exact.numerator() * BigUint::pow(n, static_cast<uint32_t>(rounded));
        return lhs <= rhs;
    }
    const double ratio = static_cast<double>(est.max_halting_steps) / est.delta;
    return ratio <= std::pow(static_cast<double>(n), c);
}

struct InputFlags {
    bool success_set = false;
    bool low_delta = false;
    bool fast_ratio = false;
};

InputFlags flags_for(const harness::DeltaEstimate& est, uint32_t n, double c) {
    InputFlags fl;
    if (est.mode == strata::Mode::exact) {
        const int cmp = compare_inverse_poly(est.exact, n, c);
        fl.success_set = cmp > 0;
        fl.low_delta = cmp < 0;
    } else {
        const double threshold = std::pow(static_cast<double>(n), -c);
        fl.success_set = est.delta > threshold;
        fl.low_delta = est.delta < threshold;
    }
    fl.fast_ratio = ratio_at_most_poly(est, n, c);
    return fl;
}

strata::DensityValue exact_density_value(uint64_t count, uint32_t n) {
    strata::DensityValue v;
    v.n = n;
    v.mode = strata::Mode::exact;
    v.exact = Dyadic(BigUint{count}, n);
    v.value = v.exact.to_double();
    return v;
}

strata::DensityValue sampled_density_value(uint64_t count, uint64_t samples, uint32_t n,
                                           double confidence) {
    strata::DensityValue v;
    v.n = n;
    v.mode = strata::Mode::sampled;
    v.value = static_cast<double>(count) / static_cast<double>(samples);
    v.half_width = hoeffding_half_width(samples, confidence);
    v.confidence = confidence;
    v.samples = samples;
    return v;
}

bool density_at_least(const strata::DensityValue& density, uint32_t n, double p_degree) {
    if (density.mode == strata::Mode::exact)
        return at_least_inverse_poly(density.exact, n, p_degree);
    return density.value >= std::pow(static_cast<double>(n), -p_degree);
}

} // namespace

DefinitionCheckReport definition_check(const harness::InverterProgram& a,
                                       const harness::CandidateFunction& f,
                                       const std::vector<uint32_t>& radii,
                                       const DefinitionCheckParams& params) {
    if (radii.empty()) throw std::invalid_argument("definition_check: empty radius range");

    DefinitionCheckReport report;
    report.candidate = f.name();
    report.inverter = a.name();
    report.params = params;
    report.weak_ppt_consistent = true;
    report.weak_partial_consistent = true;

    strata::DensityProfile success_profile;
    success_profile.set_label = "succ(" + a.name() + "," + f.name() + ",c=" +
                                std::to_string(params.c) + ")";

    for (uint32_t n : radii) {
        if (!f.in_domain(n)) {
            throw DomainError(f.name() + ": radius " + std::to_string(n) +
                              " outside candidate domain");
        }
        SphereCheck sc;
        sc.n = n;
        sc.fuel = params.fuel.fuel_for(n);
        if (n >= 2) {
            const ChernoffPlan plan = chernoff_plan(n, params.c);
            sc.plan_repetitions = plan.repetitions;
            sc.plan_epsilon = plan.epsilon;
        }
        sc.delta_threshold = std::pow(static_cast<double>(n), -params.c);
        sc.density_threshold = std::pow(static_cast<double>(n), -params.p_degree);

        uint64_t success_count = 0, low_count = 0, fast_count = 0, slow_count = 0;
        uint64_t population = 0;

        if (params.mode == strata::Mode::exact) {
            if (n > params.sphere_cap) {
                throw CapExceededError("sphere too large for exact mode: n=" + std::to_string(n) +
                                       " exceeds cap " + std::to_string(params.sphere_cap));
            }
            population = uint64_t{1} << n;
            std::vector<InputFlags> flags(population);
            parallel_for_index(population, [&](uint64_t xi) {
                const BitString x = BitString::from_index(xi, n);
                const harness::DeltaEstimate est =
                    harness::exact_delta(a, f, x, sc.fuel, params.tape_cap);
                flags[xi] = flags_for(est, n, params.c);
            });
            for (const InputFlags& fl : flags) {
                success_count += fl.success_set ? 1 : 0;
                low_count += fl.low_delta ? 1 : 0;
                fast_count += fl.fast_ratio ? 1 : 0;
            }
            slow_count = population - fast_count;
            sc.success_density = exact_density_value(success_count, n);
            sc.low_delta_density = exact_density_value(low_count, n);
            sc.fast_ratio_density = exact_density_value(fast_count, n);
            sc.slow_ratio_density = exact_density_value(slow_count, n);
        } else {
            population = params.density_samples;
            const uint64_t stream = params.seed ^ rng::mix64(uint64_t{n} * rng::kC2);
            std::vector<InputFlags> flags(population);
            parallel_for_index(population, [&](uint64_t i) {
                const BitString x = rng::bits(stream, rng::kDomainPerInput, i, n);
                const harness::DeltaEstimate est = harness::estimate_delta(
                    a, f, x, params.trials, sc.fuel, params.seed, params.confidence);
                flags[i] = flags_for(est, n, params.c);
            });
            for (const InputFlags& fl : flags) {
                success_count += fl.success_set ? 1 : 0;
                low_count += fl.low_delta ? 1 : 0;
                fast_count += fl.fast_ratio ? 1 : 0;
            }
            slow_count = population - fast_count;
            sc.success_density =
                sampled_density_value(success_count, population, n, params.confidence);
            sc.low_delta_density = sampled_density_value(low_count, population, n, params.confidence);
            sc.fast_ratio_density =
                sampled_density_value(fast_count, population, n, params.confidence);
            sc.slow_ratio_density =
                sampled_density_value(slow_count, population, n, params.confidence);
        }

        sc.strong_ppt_violated = density_at_least(sc.success_density, n, params.p_degree);
        sc.weak_ppt_consistent = density_at_least(sc.low_delta_density, n, params.p_degree);
        sc.strong_partial_violated = density_at_least(sc.fast_ratio_density, n, params.p_degree);
        sc.weak_partial_consistent = density_at_least(sc.slow_ratio_density, n, params.p_degree);

        if (sc.strong_ppt_violated) {
            report.strong_ppt_violated = true;
            report.strong_ppt_violations.push_back(n);
        }
        if (sc.strong_partial_violated) {
            report.strong_partial_violated = true;
            report.strong_partial_violations.push_back(n);
        }
        report.weak_ppt_consistent = report.weak_ppt_consistent && sc.weak_ppt_consistent;
        report.weak_partial_consistent =
            report.weak_partial_consistent && sc.weak_partial_consistent;

        success_profile.points.push_back(sc.success_density);
        report.spheres.push_back(std::move(sc));
    }

    if (success_profile.points.size() >= 4) {
        report.has_classification = true;
        report.success_profile = strata::classify_convergence(success_profile);
    }
    return report;
}

} // namespace reductions
} // namespace gencase
