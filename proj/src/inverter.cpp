#include "gencase/inverter.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gencase/errors.hpp"

namespace gencase {
namespace harness {

const char* inverter_kind_name(InverterKind k) {
    switch (k) {
        case InverterKind::total_poly: return "total_poly";
        case InverterKind::randomized_poly: return "randomized_poly";
        case InverterKind::partial_with_errors: return "partial_with_errors";
    }
    return "partial_with_errors";
}

const char* run_status_name(RunStatus s) {
    switch (s) {
        case RunStatus::success: return "success";
        case RunStatus::wrong_answer: return "wrong_answer";
        case RunStatus::fuel_exhausted: return "fuel_exhausted";
        case RunStatus::tape_exhausted: return "tape_exhausted";
    }
    return "wrong_answer";
}

RunOutcome run_inverter(const InverterProgram& a, const CandidateFunction& f, const BitString& y,
                        uint32_t n, const BitString& tape, uint64_t fuel) {
    if (fuel < 1) throw std::invalid_argument("run_inverter: fuel must be >= 1");
    const uint64_t expected_tape = a.tape_len(n);
    if (tape.size() != expected_tape) {
        throw std::invalid_argument("run_inverter: tape length " + std::to_string(tape.size()) +
                                    " != t(n) = " + std::to_string(expected_tape));
    }

    StepMeter meter(fuel);
    CoinReader coins(tape);
    InverterContext ctx{meter, coins};

    RunOutcome out;
    try {
        std::optional<BitString> answer = a.routine()(y, n, ctx);
        out.steps_used = meter.used();
        if (answer.has_value() && answer->size() == n &&
            evaluate(f, *answer).output == y) {
            out.status = RunStatus::success;
            out.preimage = std::move(answer);
        } else {
            out.status = RunStatus::wrong_answer;
        }
    } catch (const FuelExhaustedSignal&) {
        out.status = RunStatus::fuel_exhausted;
        out.steps_used = meter.used();
    } catch (const TapeExhaustedSignal&) {
        out.status = RunStatus::tape_exhausted;
        out.steps_used = meter.used();
    }

    // A total or randomized program whose harness meter ran dry with fuel to
    // spare past its declared bound is miscoded, not merely unlucky. Runs
    // clipped by an inner budget halt with steps_used < fuel and pass.
    if (a.kind() != InverterKind::partial_with_errors && out.status == RunStatus::fuel_exhausted &&
        out.steps_used == fuel && fuel > a.step_bound(n)) {
        throw StepBoundViolation(a.name() + ": ran out of fuel " + std::to_string(fuel) +
                                 " above its declared bound " + std::to_string(a.step_bound(n)) +
                                 " at n=" + std::to_string(n));
    }
    return out;
}

FuelSchedule FuelSchedule::fixed(uint64_t fuel) {
    FuelSchedule s;
    s.kind = Kind::absolute;
    s.absolute = fuel;
    return s;
}

FuelSchedule FuelSchedule::poly(double coeff, double degree, uint64_t offset) {
    FuelSchedule s;
    s.kind = Kind::polynomial;
    s.coeff = coeff;
    s.degree = degree;
    s.offset = offset;
    return s;
}

uint64_t FuelSchedule::fuel_for(uint32_t n) const {
    if (kind == Kind::absolute) return absolute;
    const double v = coeff * std::pow(static_cast<double>(n), degree);
    if (!(v >= 0) || v >= 9.2e18) return StepMeter::kUnlimited;
    return static_cast<uint64_t>(std::ceil(v - 1e-9)) + offset;
}

std::string FuelSchedule::describe() const {
    if (kind == Kind::absolute) return std::to_string(absolute);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%g*n^%g+%llu", coeff, degree,
                  static_cast<unsigned long long>(offset));
    return buf;
}

} // namespace harness
} // namespace gencase
