#include "gencase/reductions.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "gencase/errors.hpp"
#include "gencase/parallel.hpp"
#include "gencase/rng.hpp"

namespace gencase {
namespace reductions {

using harness::CandidateFunction;
using harness::InverterContext;
using harness::InverterKind;
using harness::InverterProgram;
using harness::StepMeter;

uint64_t poly_ceil(uint32_t n, double exponent) {
    const double rounded = std::round(exponent);
    if (std::abs(exponent - rounded) < 1e-12 && rounded >= 0) {
        BigUint v = BigUint::pow(n, static_cast<uint32_t>(rounded));
        if (v > BigUint::pow2(62)) {
            throw std::overflow_error("poly_ceil: " + std::to_string(n) + "^" +
                                      std::to_string(exponent) + " exceeds 2^62");
        }
        return v.to_u64();
    }
    const double v = std::pow(static_cast<double>(n), exponent);
    if (!(v >= 0.0) || v >= 4.6e18) {
        throw std::overflow_error("poly_ceil: " + std::to_string(n) + "^" +
                                  std::to_string(exponent) + " exceeds 2^62");
    }
    return static_cast<uint64_t>(std::ceil(v - 1e-9));
}

ChernoffPlan chernoff_plan(uint32_t n, double c) {
    if (n < 2) throw std::invalid_argument("chernoff_plan: requires n >= 2");
    if (!(c > 0)) throw std::invalid_argument("chernoff_plan: requires c > 0");
    ChernoffPlan plan;
    plan.n = n;
    plan.c = c;
    plan.repetitions = poly_ceil(n, 3.0 * c);
    plan.epsilon = std::exp2(-0.5 * (static_cast<double>(n) + 2.0));
    return plan;
}

double amplified_success(double delta, uint64_t repetitions) {
    if (delta <= 0.0) return 0.0;
    if (delta >= 1.0) return 1.0;
    return 1.0 - std::exp(static_cast<double>(repetitions) * std::log1p(-delta));
}

uint64_t repetitions_to_clear(double delta, double target) {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("repetitions_to_clear: delta must lie in (0, 1]");
    if (!(target >= 0.0) || target >= 1.0)
        throw std::invalid_argument("repetitions_to_clear: target must lie in [0, 1)");
    if (delta > target || delta >= 1.0) return 1;
    uint64_t k = static_cast<uint64_t>(std::ceil(std::log1p(-target) / std::log1p(-delta)));
    if (k < 1) k = 1;
    while (amplified_success(delta, k) <= target) ++k;
    return k;
}

namespace {

InverterProgram make_repeater(const InverterProgram& a, const CandidateFunction& f,
                              std::string name, std::function<uint64_t(uint32_t)> reps_for) {
    auto inner = std::make_shared<InverterProgram>(a);
    auto fn = std::make_shared<CandidateFunction>(f);
    const InverterKind kind = a.kind() == InverterKind::partial_with_errors
                                  ? InverterKind::partial_with_errors
                                  : InverterKind::randomized_poly;

    auto tape_len = [inner, reps_for](uint32_t n) {
        const uint64_t k = reps_for(n);
        const uint64_t t = inner->tape_len(n);
        if (t != 0 && k > StepMeter::kUnlimited / t) {
            throw std::overflow_error("amplify: k*t(n) coin bits overflow at n=" +
                                      std::to_string(n));
        }
        return k * t;
    };

    auto step_bound = [inner, fn, reps_for](uint32_t n) {
        const uint64_t per_rep = inner->step_bound(n);
        if (per_rep == StepMeter::kUnlimited) return StepMeter::kUnlimited;
        const uint64_t k = reps_for(n);
        const unsigned __int128 total =
            static_cast<unsigned __int128>(per_rep + fn->step_bound(n) + n + 8) * k + 8;
        return total > StepMeter::kUnlimited / 2 ? StepMeter::kUnlimited
                                                 : static_cast<uint64_t>(total);
    };

    auto routine = [inner, fn, reps_for](const BitString& y, uint32_t n,
                                         InverterContext& ctx) -> std::optional<BitString> {
        const uint64_t k = reps_for(n);
        const uint64_t t = inner->tape_len(n);
        for (uint64_t rep = 0; rep < k; ++rep) {
            harness::CoinReader segment = ctx.coins.segment(rep * t, t);
            InverterContext rep_ctx{ctx.meter, segment};
            std::optional<BitString> answer = inner->routine()(y, n, rep_ctx);
            if (answer.has_value() && answer->size() == n) {
                ctx.meter.tick();
                if (fn->eval_raw(*answer, ctx.meter) == y) return answer;
            }
        }
        return std::nullopt;
    };

    return InverterProgram(std::move(name), kind, std::move(tape_len), std::move(step_bound),
                           std::move(routine));
}

} // namespace

InverterProgram amplify(const InverterProgram& a, const CandidateFunction& f, double c) {
    auto reps_for = [c](uint32_t n) { return poly_ceil(std::max<uint32_t>(n, 1), 3.0 * c); };
    return make_repeater(a, f, "amp(" + a.name() + ",c=" + std::to_string(c) + ")", reps_for);
}

InverterProgram amplify_repeat(const InverterProgram& a, const CandidateFunction& f,
                               uint64_t repetitions) {
    if (repetitions < 1) throw std::invalid_argument("amplify_repeat: repetitions must be >= 1");
    return make_repeater(a, f, "amp(" + a.name() + ",k=" + std::to_string(repetitions) + ")",
                         [repetitions](uint32_t) { return repetitions; });
}

InverterProgram clip(const InverterProgram& b, double c) {
    auto inner = std::make_shared<InverterProgram>(b);
    auto budget_for = [c](uint32_t n) {
        return std::max<uint64_t>(1, poly_ceil(std::max<uint32_t>(n, 1), c));
    };
    auto tape_len = [inner](uint32_t n) { return inner->tape_len(n); };
    auto routine = [inner, budget_for](const BitString& y, uint32_t n,
                                       InverterContext& ctx) -> std::optional<BitString> {
        StepMeter boxed(budget_for(n), &ctx.meter);
        InverterContext boxed_ctx{boxed, ctx.coins};
        return inner->routine()(y, n, boxed_ctx);
    };
    return InverterProgram("clip(" + b.name() + ",c=" + std::to_string(c) + ")",
                           InverterKind::total_poly, std::move(tape_len), budget_for,
                           std::move(routine));
}

AchievementRatio achievement_ratio(const InverterProgram& b, const CandidateFunction& f,
                                   const BitString& x, const RatioParams& params) {
    AchievementRatio r;
    r.delta = params.mode == strata::Mode::exact
                  ? harness::exact_delta(b, f, x, params.fuel, params.tape_cap)
                  : harness::estimate_delta(b, f, x, params.trials, params.fuel, params.seed,
                                            params.confidence);
    r.no_halting_run = !r.delta.saw_halting;
    const bool zero_delta = r.delta.counts.success == 0;
    if (r.no_halting_run || zero_delta) {
        r.is_infinite = true;
        return r;
    }
    r.ratio = static_cast<double>(r.delta.max_halting_steps) / r.delta.delta;
    return r;
}

AveragingSplit averaging_split(std::span<const double> values, double rho) {
    if (values.empty()) throw std::invalid_argument("averaging_split: empty value list");
    if (rho < 0) throw std::invalid_argument("averaging_split: rho must be >= 0");
    double sum = 0.0;
    for (double v : values) {
        if (v < 0.0 || v > 1.0)
            throw std::invalid_argument("averaging_split: values must lie in [0, 1]");
        sum += v;
    }
    const double mean = sum / static_cast<double>(values.size());
    if (mean < rho - 1e-9) {
        throw std::invalid_argument("averaging_split: mean " + std::to_string(mean) +
                                    " below rho " + std::to_string(rho));
    }
    AveragingSplit split;
    split.total = values.size();
    for (double v : values) {
        if (v > rho / 2.0) ++split.count_above;
    }
    split.fraction = static_cast<double>(split.count_above) / static_cast<double>(split.total);
    return split;
}

AggregateSuccess aggregate_success(const InverterProgram& a, const CandidateFunction& f,
                                   uint32_t n, strata::Mode mode, const AggregateParams& params) {
    AggregateSuccess agg;
    agg.n = n;
    agg.mode = mode;

    if (mode == strata::Mode::exact) {
        if (n > params.sphere_cap) {
            throw CapExceededError("sphere too large for exact mode: n=" + std::to_string(n) +
                                   " exceeds cap " + std::to_string(params.sphere_cap));
        }
        const uint64_t t = a.tape_len(n);
        if (t > params.tape_cap) {
            throw CapExceededError("tape space too large for exact mode: t(n)=" +
                                   std::to_string(t) + " exceeds cap " +
                                   std::to_string(params.tape_cap));
        }
        const uint64_t sphere = uint64_t{1} << n;
        const uint64_t tapes = uint64_t{1} << t;
        std::vector<uint64_t> hits_per_x(sphere, 0);
        parallel_for_index(sphere, [&](uint64_t xi) {
            const BitString x = BitString::from_index(xi, n);
            const BitString y = harness::evaluate(f, x).output;
            uint64_t hits = 0;
            for (uint64_t ti = 0; ti < tapes; ++ti) {
                const BitString tape = BitString::from_index(ti, static_cast<uint32_t>(t));
                if (harness::run_inverter(a, f, y, n, tape, params.fuel).status ==
                    harness::RunStatus::success) {
                    ++hits;
                }
            }
            hits_per_x[xi] = hits;
        });
        uint64_t total_hits = 0;
        for (uint64_t h : hits_per_x) total_hits += h;
        agg.exact = Dyadic(BigUint{total_hits}, n + static_cast<uint32_t>(t));
        agg.value = agg.exact.to_double();
        agg.trials = sphere * tapes;
        return agg;
    }

    if (params.trials < 1) throw std::invalid_argument("aggregate_success: trials must be >= 1");
    const uint64_t t = a.tape_len(n);
    std::vector<uint8_t> success(params.trials, 0);
    parallel_for_index(params.trials, [&](uint64_t i) {
        const BitString x = rng::bits(params.seed, rng::kDomainJointPair, i, n);
        const BitString tape =
            rng::bits(params.seed, rng::kDomainJointTape, i, static_cast<uint32_t>(t));
        const BitString y = harness::evaluate(f, x).output;
        success[i] = harness::run_inverter(a, f, y, n, tape, params.fuel).status ==
                             harness::RunStatus::success
                         ? 1
                         : 0;
    });
    uint64_t hits = 0;
    for (uint8_t s : success) hits += s;
    agg.value = static_cast<double>(hits) / static_cast<double>(params.trials);
    agg.half_width = hoeffding_half_width(params.trials, params.confidence);
    agg.confidence = params.confidence;
    agg.trials = params.trials;
    return agg;
}

} // namespace reductions
} // namespace gencase
