#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "gencase/bitstring.hpp"
#include "gencase/meter.hpp"

namespace gencase {
namespace harness {

/// A length-regular candidate function with a step-counting evaluator.
///
/// The evaluator is deterministic; it charges its work to the supplied
/// meter via tick(). Each candidate declares its valid input lengths, its
/// output-length function m(n), and a step bound that `evaluate` checks on
/// every call.
class CandidateFunction {
public:
    using Evaluator = std::function<BitString(const BitString&, StepMeter&)>;
    using DomainFn = std::function<bool(uint32_t)>;
    using LenFn = std::function<uint32_t(uint32_t)>;
    using BoundFn = std::function<uint64_t(uint32_t)>;

    CandidateFunction(std::string name, DomainFn domain, LenFn output_length, BoundFn step_bound,
                      Evaluator evaluator)
        : name_(std::move(name)),
          domain_(std::move(domain)),
          output_length_(std::move(output_length)),
          step_bound_(std::move(step_bound)),
          evaluator_(std::move(evaluator)) {}

    const std::string& name() const { return name_; }
    bool in_domain(uint32_t n) const { return domain_(n); }
    uint32_t output_length(uint32_t n) const { return output_length_(n); }
    uint64_t step_bound(uint32_t n) const { return step_bound_(n); }

    /// Raw metered evaluation; no domain or bound checks. Inverters that
    /// compute f internally call this so the work lands on their own meter.
    BitString eval_raw(const BitString& x, StepMeter& meter) const { return evaluator_(x, meter); }

private:
    std::string name_;
    DomainFn domain_;
    LenFn output_length_;
    BoundFn step_bound_;
    Evaluator evaluator_;
};

struct Evaluation {
    BitString output;
    uint64_t steps = 0;
};

/// Evaluates f(x) on a fresh unmetered counter. Checks the domain, the
/// declared step bound, and length regularity |f(x)| = m(|x|); violations
/// of the latter two indicate a miscoded candidate and throw.
Evaluation evaluate(const CandidateFunction& f, const BitString& x);

} // namespace harness
} // namespace gencase
