#pragma once

#include <cstdint>

#include "gencase/density.hpp"
#include "gencase/input_set.hpp"
#include "gencase/inverter.hpp"
#include "gencase/rational.hpp"

namespace gencase {
namespace harness {

/// Exact mode enumerates all 2^t(n) coin tapes up to this cap by default.
inline constexpr uint32_t kDefaultTapeCap = 20;

struct OutcomeCounts {
    uint64_t success = 0;
    uint64_t wrong_answer = 0;
    uint64_t fuel_exhausted = 0;
    uint64_t tape_exhausted = 0;

    uint64_t total() const { return success + wrong_answer + fuel_exhausted + tape_exhausted; }
    void add(RunStatus s) {
        switch (s) {
            case RunStatus::success: ++success; break;
            case RunStatus::wrong_answer: ++wrong_answer; break;
            case RunStatus::fuel_exhausted: ++fuel_exhausted; break;
            case RunStatus::tape_exhausted: ++tape_exhausted; break;
        }
    }
};

/// Per-input success probability of an inverter on f(x), over coin tapes.
/// Exact mode: delta = (#successful tapes) / 2^t(n), an exact rational.
/// Both wrong answers and fuel exhaustion count as failure; the histogram
/// keeps them apart.
struct DeltaEstimate {
    BitString x;
    uint32_t n = 0;
    strata::Mode mode = strata::Mode::exact;
    Dyadic exact;             // exact mode only
    double delta = 0.0;       // exact.to_double() or the sample mean
    double half_width = 0.0;  // sampled mode
    double confidence = 0.0;  // sampled mode
    uint64_t trials = 0;      // tapes enumerated or sampled
    uint64_t fuel = 0;
    double mean_steps = 0.0;
    /// Max steps among halting runs (success or wrong answer); the
    /// worst-case halting time statistic used by achievement ratios.
    uint64_t max_halting_steps = 0;
    bool saw_halting = false;
    OutcomeCounts counts;
};

/// Enumerates every coin tape. Throws CapExceededError when t(n) > tape_cap.
DeltaEstimate exact_delta(const InverterProgram& a, const CandidateFunction& f, const BitString& x,
                          uint64_t fuel, uint32_t tape_cap = kDefaultTapeCap);

/// Samples `trials` tapes. Trial i of input x reads its coins from the
/// counter stream (seed ^ mix(hash(x)), tape-domain, i), so estimates are
/// reproducible for a fixed seed and independent of scheduling.
DeltaEstimate estimate_delta(const InverterProgram& a, const CandidateFunction& f,
                             const BitString& x, uint64_t trials, uint64_t fuel, uint64_t seed,
                             double confidence = kDefaultConfidence);

struct SuccessSetParams {
    strata::Mode mode = strata::Mode::exact;
    FuelSchedule fuel = FuelSchedule::poly(4.0, 3.0);
    uint64_t trials = 200;  // sampled mode tapes per input
    uint64_t seed = 0;
    uint32_t tape_cap = kDefaultTapeCap;
    double confidence = kDefaultConfidence;
};

/// The set { x : delta_{A,f}(x) > |x|^-c }, as a sphere-agnostic input set
/// whose membership runs the delta measurement on the queried string. With
/// exact mode the threshold comparison is exact; with sampled mode the set
/// is flagged as estimated membership. Feed it to strata::density_profile
/// to measure how much of each sphere the inverter conquers.
strata::InputSet success_set(const InverterProgram& a, const CandidateFunction& f, double c,
                             const SuccessSetParams& params = {});

} // namespace harness
} // namespace gencase
