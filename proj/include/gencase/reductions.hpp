#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gencase/delta.hpp"
#include "gencase/function.hpp"
#include "gencase/inverter.hpp"

namespace gencase {
namespace reductions {

/// Repetition plan for boosting a per-input success probability of at
/// least n^-c to at least 1 - epsilon: k = ceil(n^(3c)) independent
/// repetitions suffice, with epsilon = 2^-((n+2)/2). Requires n >= 2.
struct ChernoffPlan {
    uint32_t n = 0;
    double c = 1.0;
    uint64_t repetitions = 0;
    double epsilon = 0.0;
};

ChernoffPlan chernoff_plan(uint32_t n, double c);

/// ceil(n^exponent), exact integer arithmetic when the exponent is
/// (numerically) integral. Throws std::overflow_error past 2^62.
uint64_t poly_ceil(uint32_t n, double exponent);

/// The repeat-until-witness amplifier. Runs `a` up to k = ceil(n^(3c))
/// times on disjoint tape segments of length t(n) each, verifying every
/// answer through f, and stops at the first verified preimage. For any x
/// with delta_{a,f}(x) = d >= n^-c the amplified program's success
/// probability is 1 - (1-d)^k >= 1 - epsilon. Verification work is charged
/// to the amplified program's own meter. The precondition is that `a` is
/// total within its fuel per repetition; clip it first if it is not.
harness::InverterProgram amplify(const harness::InverterProgram& a,
                                 const harness::CandidateFunction& f, double c);

/// Same repeat-until-witness construction with a fixed repetition count
/// independent of n. This is the general error-reduction tool: boosting a
/// program whose per-input success probability sits at some floor until it
/// clears a higher threshold.
harness::InverterProgram amplify_repeat(const harness::InverterProgram& a,
                                        const harness::CandidateFunction& f,
                                        uint64_t repetitions);

/// Closed-form amplified success probability 1 - (1 - delta)^k.
double amplified_success(double delta, uint64_t repetitions);

/// Smallest repetition count whose amplified success strictly clears the
/// target: min { k : 1 - (1 - delta)^k > target }. Requires delta in (0, 1]
/// and target in [0, 1).
uint64_t repetitions_to_clear(double delta, double target);

/// Budget-boxes a possibly partial program into a total one: clip(b, c)
/// runs b with an inner budget of ceil(n^c) steps, reproducing b's outcome
/// bit-for-bit whenever b halts within the budget and reporting
/// FuelExhausted otherwise. Per-input success probabilities are unchanged
/// on every x whose successful runs fit the budget.
harness::InverterProgram clip(const harness::InverterProgram& b, double c);

struct RatioParams {
    strata::Mode mode = strata::Mode::exact;
    uint64_t fuel = 4096;
    uint64_t trials = 200;  // sampled mode
    uint64_t seed = 0;
    uint32_t tape_cap = harness::kDefaultTapeCap;
    double confidence = kDefaultConfidence;
};

/// Halting time over success probability on one instance. The time
/// statistic T is the maximum steps among halting runs in the observation
/// set (deterministic programs collapse to their single halting time);
/// mean steps ride along in `delta`. A zero success probability or an
/// observation window with no halting run at all reports the distinguished
/// infinite value rather than dividing.
struct AchievementRatio {
    harness::DeltaEstimate delta;
    double ratio = 0.0;
    bool is_infinite = false;
    bool no_halting_run = false;
};

AchievementRatio achievement_ratio(const harness::InverterProgram& b,
                                   const harness::CandidateFunction& f, const BitString& x,
                                   const RatioParams& params = {});

/// Counts how many of the values exceed rho/2. Requires mean(values) >= rho
/// (up to 1e-9 slack for float accumulation); under that hypothesis the
/// returned fraction is guaranteed >= rho/2.
struct AveragingSplit {
    uint64_t count_above = 0;
    uint64_t total = 0;
    double fraction = 0.0;
};

AveragingSplit averaging_split(std::span<const double> values, double rho);

struct AggregateParams {
    uint64_t fuel = 4096;
    uint64_t trials = 1000;  // sampled mode (x, tape) pairs
    uint64_t seed = 0;
    uint32_t sphere_cap = strata::kDefaultSphereCap;
    uint32_t tape_cap = harness::kDefaultTapeCap;
    double confidence = kDefaultConfidence;
};

/// Success probability over the product space of inputs and coins on one
/// sphere. Exact mode enumerates all (x, tape) pairs jointly, so the value
/// equals the u_n-weighted mean of per-input deltas as an exact rational —
/// the factorized form used throughout. Sampled mode draws (x, tape) pairs.
struct AggregateSuccess {
    uint32_t n = 0;
    strata::Mode mode = strata::Mode::exact;
    Dyadic exact;
    double value = 0.0;
    double half_width = 0.0;
    double confidence = 0.0;
    uint64_t trials = 0;
};

AggregateSuccess aggregate_success(const harness::InverterProgram& a,
                                   const harness::CandidateFunction& f, uint32_t n,
                                   strata::Mode mode, const AggregateParams& params = {});

} // namespace reductions
} // namespace gencase
