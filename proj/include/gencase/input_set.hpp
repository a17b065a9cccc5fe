#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gencase/bitstring.hpp"

namespace gencase {
namespace strata {

/// A set of binary strings, queried sphere by sphere. Backed either by an
/// explicit list of members or by a total membership predicate. Membership
/// must be deterministic on every queried sphere.
///
/// Sets produced from sampled measurements (see harness::success_set in
/// sampled mode) still expose a deterministic predicate -- the estimate is
/// a pure function of the set's seed -- but are flagged `estimated` so
/// downstream reports can say so.
class InputSet {
public:
    using Predicate = std::function<bool(const BitString&)>;

    static InputSet from_predicate(std::string label, Predicate pred,
                                   bool estimated_membership = false);
    static InputSet from_members(std::string label, const std::vector<BitString>& members);

    bool contains(const BitString& x) const { return pred_(x); }
    const std::string& label() const { return label_; }
    bool estimated_membership() const { return estimated_; }

    InputSet complement() const;

private:
    InputSet(std::string label, Predicate pred, bool estimated)
        : label_(std::move(label)), pred_(std::move(pred)), estimated_(estimated) {}

    std::string label_;
    Predicate pred_;
    bool estimated_ = false;
};

/// Named reference sets used by the CLI `density` verb and the test suites.
/// Known names: all, none, first_bit_zero, has_11, not_all_zeros.
InputSet reference_set(const std::string& name);
std::vector<std::string> reference_set_names();

} // namespace strata
} // namespace gencase
