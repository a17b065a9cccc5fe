#pragma once

#include <cstdint>
#include <string>

#include "gencase/bigint.hpp"

namespace gencase {

/// Exact dyadic rational num / 2^k.
///
/// Every exact quantity in this workbench is a count over a power-of-two
/// space (sphere of radius n, tape space 2^t, or their product), so dyadic
/// rationals represent them without loss. Kept normalized (numerator odd or
/// exponent zero) so equality is structural.
class Dyadic {
public:
    Dyadic() = default;

    /// count / 2^log2_den, e.g. hits over an enumerated tape space.
    Dyadic(BigUint num, uint32_t log2_den) : num_(std::move(num)), exp2_(log2_den) {
        normalize();
    }

    static Dyadic zero() { return {}; }
    static Dyadic one() { return {BigUint{1}, 0}; }

    const BigUint& numerator() const { return num_; }
    BigUint denominator() const { return BigUint::pow2(exp2_); }
    uint32_t log2_denominator() const { return exp2_; }

    Dyadic operator+(const Dyadic& rhs) const;
    bool operator==(const Dyadic& rhs) const = default;
    std::strong_ordering operator<=>(const Dyadic& rhs) const;

    /// 1 - value; requires value <= 1.
    Dyadic complement() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return exp2_ == 0 && num_ == BigUint{1}; }

    double to_double() const;

    std::string num_string() const { return num_.to_string(); }
    std::string den_string() const { return denominator().to_string(); }
    /// "num/2^k" display form.
    std::string to_string() const;

private:
    void normalize();

    BigUint num_;        // zero-valued Dyadic keeps num_ == 0, exp2_ == 0
    uint32_t exp2_ = 0;
};

/// Three-way comparison of a dyadic value against n^-c: negative when
/// value < n^-c, zero on exact equality, positive when value > n^-c.
/// Uses exact integer cross-multiplication when c is (numerically) an
/// integer, doubles otherwise. Strictness matters: the success set and the
/// low-delta set both use strict inequalities, so a value sitting exactly
/// on the threshold belongs to neither.
int compare_inverse_poly(const Dyadic& value, uint32_t n, double c);

inline bool exceeds_inverse_poly(const Dyadic& value, uint32_t n, double c) {
    return compare_inverse_poly(value, n, c) > 0;
}
inline bool below_inverse_poly(const Dyadic& value, uint32_t n, double c) {
    return compare_inverse_poly(value, n, c) < 0;
}
inline bool at_least_inverse_poly(const Dyadic& value, uint32_t n, double c) {
    return compare_inverse_poly(value, n, c) >= 0;
}

} // namespace gencase
