#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "gencase/bitstring.hpp"
#include "gencase/function.hpp"
#include "gencase/meter.hpp"

namespace gencase {
namespace harness {

/// Sequential reader over a window of a coin tape. Reading past the window
/// throws TapeExhaustedSignal. Windows support sub-segments so a wrapper
/// program can hand each inner repetition its own disjoint slice.
class CoinReader {
public:
    CoinReader(const BitString& tape, uint64_t begin, uint64_t end)
        : tape_(&tape), start_(begin), pos_(begin), end_(std::min<uint64_t>(end, tape.size())) {}

    explicit CoinReader(const BitString& tape) : CoinReader(tape, 0, tape.size()) {}

    uint8_t next() {
        if (pos_ >= end_) throw TapeExhaustedSignal{};
        return tape_->bit(static_cast<uint32_t>(pos_++));
    }

    /// Next `nbits` coins as a big-endian integer; nbits <= 64.
    uint64_t next_word(uint32_t nbits) {
        uint64_t v = 0;
        for (uint32_t i = 0; i < nbits; ++i) v = (v << 1) | next();
        return v;
    }

    BitString next_string(uint32_t nbits) {
        std::vector<uint8_t> out(nbits);
        for (uint32_t i = 0; i < nbits; ++i) out[i] = next();
        return BitString(std::move(out));
    }

    /// Reader over [window_begin + offset, window_begin + offset + length).
    CoinReader segment(uint64_t offset, uint64_t length) const {
        return CoinReader(*tape_, start_ + offset, start_ + offset + length);
    }

    uint64_t consumed() const { return pos_ - start_; }

private:
    const BitString* tape_;
    uint64_t start_;
    uint64_t pos_;
    uint64_t end_;
};

struct InverterContext {
    StepMeter& meter;
    CoinReader& coins;
};

enum class InverterKind { total_poly, randomized_poly, partial_with_errors };

const char* inverter_kind_name(InverterKind k);

enum class RunStatus { success, wrong_answer, fuel_exhausted, tape_exhausted };

const char* run_status_name(RunStatus s);

struct RunOutcome {
    RunStatus status = RunStatus::wrong_answer;
    std::optional<BitString> preimage;  // set only on success, after verification
    uint64_t steps_used = 0;

    bool operator==(const RunOutcome&) const = default;
};

/// A fuel-metered, coin-tape-driven inversion program.
///
/// The routine maps (y, n) to a candidate preimage (or nullopt when it
/// halts without one), reading coins and ticking steps through the context.
/// It is deterministic given (y, n, tape): replays reproduce the run.
/// Success is never taken from the routine; run_inverter verifies.
class InverterProgram {
public:
    using Routine =
        std::function<std::optional<BitString>(const BitString& y, uint32_t n, InverterContext&)>;
    using TapeLenFn = std::function<uint64_t(uint32_t)>;
    using BoundFn = std::function<uint64_t(uint32_t)>;

    InverterProgram(std::string name, InverterKind kind, TapeLenFn tape_len, BoundFn step_bound,
                    Routine routine)
        : name_(std::move(name)),
          kind_(kind),
          tape_len_(std::move(tape_len)),
          step_bound_(std::move(step_bound)),
          routine_(std::move(routine)) {}

    const std::string& name() const { return name_; }
    InverterKind kind() const { return kind_; }
    uint64_t tape_len(uint32_t n) const { return tape_len_(n); }
    /// Declared step bound; StepMeter::kUnlimited when none is claimed.
    uint64_t step_bound(uint32_t n) const { return step_bound_(n); }
    const Routine& routine() const { return routine_; }

private:
    std::string name_;
    InverterKind kind_;
    TapeLenFn tape_len_;
    BoundFn step_bound_;
    Routine routine_;
};

/// Runs one inversion attempt and verifies the answer.
///
/// The program receives y plus the length advice n and may consume at most
/// |tape| = t(n) coins and `fuel` steps. Success is assigned only after
/// this function itself checks |x'| = n and f(x') = y (verification runs on
/// a separate meter and is not charged to the program). A halting run with
/// no valid preimage is WrongAnswer.
///
/// Throws std::invalid_argument when |tape| != t(n) or fuel == 0, and
/// StepBoundViolation when a total/randomized program let the harness meter
/// run dry despite fuel exceeding its declared bound.
RunOutcome run_inverter(const InverterProgram& a, const CandidateFunction& f, const BitString& y,
                        uint32_t n, const BitString& tape, uint64_t fuel);

/// Fuel as a function of the radius: either a constant or ceil(coeff * n^degree) + offset.
struct FuelSchedule {
    enum class Kind { absolute, polynomial };

    Kind kind = Kind::polynomial;
    uint64_t absolute = 0;
    double coeff = 4.0;
    double degree = 3.0;
    uint64_t offset = 64;

    static FuelSchedule fixed(uint64_t fuel);
    static FuelSchedule poly(double coeff, double degree, uint64_t offset = 64);

    uint64_t fuel_for(uint32_t n) const;
    std::string describe() const;
};

} // namespace harness
} // namespace gencase
