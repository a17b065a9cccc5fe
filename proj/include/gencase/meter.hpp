#pragma once

#include <cstdint>

namespace gencase {
namespace harness {

/// Thrown by StepMeter when a tick would exceed the budget. Internal
/// control flow: run_inverter converts it into a FuelExhausted outcome;
/// it never escapes the harness.
struct FuelExhaustedSignal {};

/// Thrown by CoinReader when a program reads past its tape. Converted into
/// a TapeExhausted outcome by run_inverter.
struct TapeExhaustedSignal {};

/// Abstract step budget. Programs call tick() once per unit of work; when
/// the budget runs out the meter consumes its remaining fuel and throws.
///
/// Meters nest: a child meter (used by clip) enforces its own budget and
/// forwards accepted ticks to the parent, so an inner cutoff reads as a
/// FuelExhausted outcome while the outer meter still knows the true count.
class StepMeter {
public:
    static constexpr uint64_t kUnlimited = ~uint64_t{0};

    explicit StepMeter(uint64_t budget = kUnlimited, StepMeter* parent = nullptr)
        : budget_(budget), parent_(parent) {}

    void tick(uint64_t k = 1) {
        if (k > budget_ - used_) {
            used_ = budget_;
            throw FuelExhaustedSignal{};
        }
        used_ += k;
        if (parent_ != nullptr) parent_->tick(k);
    }

    uint64_t used() const { return used_; }
    uint64_t budget() const { return budget_; }

private:
    uint64_t used_ = 0;
    uint64_t budget_;
    StepMeter* parent_;
};

} // namespace harness
} // namespace gencase
