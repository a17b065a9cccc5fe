#include "gencase/function.hpp"

#include "gencase/errors.hpp"

namespace gencase {
namespace harness {

Evaluation evaluate(const CandidateFunction& f, const BitString& x) {
    const uint32_t n = x.size();
    if (!f.in_domain(n)) {
        throw DomainError(f.name() + ": input length " + std::to_string(n) +
                          " outside declared domain");
    }
    StepMeter meter;
    BitString y = f.eval_raw(x, meter);
    if (meter.used() > f.step_bound(n)) {
        throw StepBoundViolation(f.name() + ": evaluator used " + std::to_string(meter.used()) +
                                 " steps, declared bound " + std::to_string(f.step_bound(n)) +
                                 " at n=" + std::to_string(n));
    }
    if (y.size() != f.output_length(n)) {
        throw StepBoundViolation(f.name() + ": output length " + std::to_string(y.size()) +
                                 " != declared m(n)=" + std::to_string(f.output_length(n)));
    }
    return {std::move(y), meter.used()};
}

} // namespace harness
} // namespace gencase
