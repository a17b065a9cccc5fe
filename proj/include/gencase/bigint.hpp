#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gencase {

/// Unsigned arbitrary-precision integer, little-endian 64-bit limbs.
///
/// Covers exactly what exact-mode arithmetic needs: sphere cardinalities
/// 2^n for unbounded n, numerators of spherical densities, and the integer
/// cross-multiplications behind exact threshold comparisons. Not a general
/// bignum; division exists only by small (64-bit) divisors.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v);  // NOLINT: implicit by design, mirrors integer literals

    static BigUint pow2(uint32_t k);
    /// base^exp by repeated squaring.
    static BigUint pow(uint64_t base, uint32_t exp);

    BigUint operator+(const BigUint& rhs) const;
    /// Requires *this >= rhs.
    BigUint operator-(const BigUint& rhs) const;
    BigUint operator*(const BigUint& rhs) const;
    BigUint operator<<(uint32_t bits) const;
    BigUint operator>>(uint32_t bits) const;

    std::strong_ordering operator<=>(const BigUint& rhs) const;
    bool operator==(const BigUint& rhs) const = default;

    bool is_zero() const { return limbs_.empty(); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1) == 0; }
    /// Number of significant bits; 0 for zero.
    uint32_t bit_length() const;
    /// Index of the lowest set bit; 0 for zero.
    uint32_t trailing_zero_bits() const;

    bool fits_u64() const { return limbs_.size() <= 1; }
    uint64_t to_u64() const;  // truncates to the low limb
    double to_double() const;
    std::string to_string() const;  // decimal

private:
    void trim();
    /// Divides in place by a nonzero 64-bit divisor, returns the remainder.
    uint64_t divmod_small(uint64_t divisor);

    std::vector<uint64_t> limbs_;  // empty == zero
};

/// 2^n as an exact integer; the cardinality of the sphere of radius n.
BigUint sphere_size(uint32_t n);

} // namespace gencase
