#include "gencase/input_set.hpp"

#include "gencase/errors.hpp"

namespace gencase {
namespace strata {

InputSet InputSet::from_predicate(std::string label, Predicate pred, bool estimated_membership) {
    return InputSet(std::move(label), std::move(pred), estimated_membership);
}

InputSet InputSet::from_members(std::string label, const std::vector<BitString>& members) {
    auto table = std::make_shared<std::set<std::vector<uint8_t>>>();
    for (const auto& m : members) table->insert(m.bits());
    return InputSet(std::move(label),
                    [table](const BitString& x) { return table->count(x.bits()) > 0; },
                    /*estimated=*/false);
}

InputSet InputSet::complement() const {
    Predicate inner = pred_;
    return InputSet("!" + label_, [inner](const BitString& x) { return !inner(x); }, estimated_);
}

InputSet reference_set(const std::string& name) {
    if (name == "all") {
        return InputSet::from_predicate("all", [](const BitString&) { return true; });
    }
    if (name == "none") {
        return InputSet::from_predicate("none", [](const BitString&) { return false; });
    }
    if (name == "first_bit_zero") {
        return InputSet::from_predicate("first_bit_zero", [](const BitString& x) {
            return !x.empty() && x.bit(0) == 0;
        });
    }
    if (name == "has_11") {
        return InputSet::from_predicate("has_11", [](const BitString& x) {
            for (uint32_t i = 0; i + 1 < x.size(); ++i) {
                if (x.bit(i) == 1 && x.bit(i + 1) == 1) return true;
            }
            return false;
        });
    }
    if (name == "not_all_zeros") {
        return InputSet::from_predicate("not_all_zeros", [](const BitString& x) {
            for (uint32_t i = 0; i < x.size(); ++i) {
                if (x.bit(i) != 0) return true;
            }
            return false;
        });
    }
    throw ConfigError("unknown reference set: " + name);
}

std::vector<std::string> reference_set_names() {
    return {"all", "none", "first_bit_zero", "has_11", "not_all_zeros"};
}

} // namespace strata
} // namespace gencase
