#include "gencase/delta.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gencase/errors.hpp"
#include "gencase/parallel.hpp"
#include "gencase/rng.hpp"

namespace gencase {
namespace harness {

namespace {

struct TrialRecord {
    RunStatus status;
    uint64_t steps;
};

DeltaEstimate reduce_trials(const BitString& x, uint64_t fuel,
                            const std::vector<TrialRecord>& records) {
    DeltaEstimate est;
    est.x = x;
    est.n = x.size();
    est.trials = records.size();
    est.fuel = fuel;
    uint64_t total_steps = 0;
    for (const TrialRecord& r : records) {
        est.counts.add(r.status);
        total_steps += r.steps;
        if (r.status == RunStatus::success || r.status == RunStatus::wrong_answer) {
            est.saw_halting = true;
            est.max_halting_steps = std::max(est.max_halting_steps, r.steps);
        }
    }
    est.mean_steps = static_cast<double>(total_steps) / static_cast<double>(records.size());
    return est;
}

} // namespace

DeltaEstimate exact_delta(const InverterProgram& a, const CandidateFunction& f, const BitString& x,
                          uint64_t fuel, uint32_t tape_cap) {
    const uint32_t n = x.size();
    const uint64_t t = a.tape_len(n);
    if (t > tape_cap) {
        throw CapExceededError("tape space too large for exact mode: t(n)=" + std::to_string(t) +
                               " exceeds cap " + std::to_string(tape_cap));
    }
    const BitString y = evaluate(f, x).output;
    const uint64_t total = uint64_t{1} << t;
    std::vector<TrialRecord> records(total);
    parallel_for_index(total, [&](uint64_t i) {
        const BitString tape = BitString::from_index(i, static_cast<uint32_t>(t));
        const RunOutcome out = run_inverter(a, f, y, n, tape, fuel);
        records[i] = {out.status, out.steps_used};
    });
    DeltaEstimate est = reduce_trials(x, fuel, records);
    est.mode = strata::Mode::exact;
    est.exact = Dyadic(BigUint{est.counts.success}, static_cast<uint32_t>(t));
    est.delta = est.exact.to_double();
    return est;
}

DeltaEstimate estimate_delta(const InverterProgram& a, const CandidateFunction& f,
                             const BitString& x, uint64_t trials, uint64_t fuel, uint64_t seed,
                             double confidence) {
    if (trials < 1) throw std::invalid_argument("estimate_delta: trials must be >= 1");
    const uint32_t n = x.size();
    const uint64_t t = a.tape_len(n);
    const BitString y = evaluate(f, x).output;
    const uint64_t stream = seed ^ rng::mix64(x.content_hash() * rng::kC1);
    std::vector<TrialRecord> records(trials);
    parallel_for_index(trials, [&](uint64_t i) {
        const BitString tape = rng::bits(stream, rng::kDomainDeltaTape, i, static_cast<uint32_t>(t));
        const RunOutcome out = run_inverter(a, f, y, n, tape, fuel);
        records[i] = {out.status, out.steps_used};
    });
    DeltaEstimate est = reduce_trials(x, fuel, records);
    est.mode = strata::Mode::sampled;
    est.delta = static_cast<double>(est.counts.success) / static_cast<double>(trials);
    est.half_width = hoeffding_half_width(trials, confidence);
    est.confidence = confidence;
    return est;
}

strata::InputSet success_set(const InverterProgram& a, const CandidateFunction& f, double c,
                             const SuccessSetParams& params) {
    std::string label = "succ(" + a.name() + "," + f.name() + ",c=" + std::to_string(c) + ")";
    const bool estimated = params.mode == strata::Mode::sampled;
    auto prog = std::make_shared<InverterProgram>(a);
    auto fn = std::make_shared<CandidateFunction>(f);
    const SuccessSetParams p = params;
    return strata::InputSet::from_predicate(
        std::move(label),
        [prog, fn, c, p](const BitString& x) {
            const uint32_t n = x.size();
            const uint64_t fuel = p.fuel.fuel_for(n);
            if (p.mode == strata::Mode::exact) {
                const DeltaEstimate est = exact_delta(*prog, *fn, x, fuel, p.tape_cap);
                return exceeds_inverse_poly(est.exact, n, c);
            }
            const DeltaEstimate est =
                estimate_delta(*prog, *fn, x, p.trials, fuel, p.seed, p.confidence);
            return est.delta > std::pow(static_cast<double>(n), -c);
        },
        estimated);
}

} // namespace harness
} // namespace gencase
