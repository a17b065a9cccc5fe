#include "gencase/rational.hpp"

#include <cmath>

namespace gencase {

void Dyadic::normalize() {
    if (num_.is_zero()) {
        exp2_ = 0;
        return;
    }
    const uint32_t tz = std::min(num_.trailing_zero_bits(), exp2_);
    if (tz > 0) {
        num_ = num_ >> tz;
        exp2_ -= tz;
    }
}

Dyadic Dyadic::operator+(const Dyadic& rhs) const {
    const uint32_t e = std::max(exp2_, rhs.exp2_);
    BigUint a = num_ << (e - exp2_);
    BigUint b = rhs.num_ << (e - rhs.exp2_);
    return {a + b, e};
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& rhs) const {
    const uint32_t e = std::max(exp2_, rhs.exp2_);
    BigUint a = num_ << (e - exp2_);
    BigUint b = rhs.num_ << (e - rhs.exp2_);
    return a <=> b;
}

Dyadic Dyadic::complement() const {
    return {BigUint::pow2(exp2_) - num_, exp2_};
}

double Dyadic::to_double() const {
    if (num_.is_zero()) return 0.0;
    // Scale down through the top 64 bits to stay in double range for any exponent.
    const uint32_t bl = num_.bit_length();
    if (bl <= 64) return std::ldexp(static_cast<double>(num_.to_u64()), -static_cast<int>(exp2_));
    const uint32_t shift = bl - 64;
    const double top = static_cast<double>((num_ >> shift).to_u64());
    return std::ldexp(top, static_cast<int>(shift) - static_cast<int>(exp2_));
}

std::string Dyadic::to_string() const {
    if (exp2_ == 0) return num_.to_string();
    return num_.to_string() + "/2^" + std::to_string(exp2_);
}

int compare_inverse_poly(const Dyadic& value, uint32_t n, double c) {
    const double rounded = std::round(c);
    if (std::abs(c - rounded) < 1e-12 && rounded >= 0 && rounded <= 4096) {
        // value = s/2^t vs 1/n^c  <=>  s * n^c vs 2^t, exactly.
        BigUint lhs = value.numerator() * BigUint::pow(n, static_cast<uint32_t>(rounded));
        BigUint rhs = BigUint::pow2(value.log2_denominator());
        const auto cmp = lhs <=> rhs;
        return cmp < 0 ? -1 : (cmp > 0 ? 1 : 0);
    }
    const double lhs = value.to_double();
    const double rhs = std::pow(static_cast<double>(n), -c);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

} // namespace gencase
