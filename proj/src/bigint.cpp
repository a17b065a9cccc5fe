#include "gencase/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace gencase {

namespace {
using u128 = unsigned __int128;
}

BigUint::BigUint(uint64_t v) {
    if (v != 0) limbs_.push_back(v);
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow2(uint32_t k) {
    BigUint r;
    r.limbs_.assign(k / 64 + 1, 0);
    r.limbs_.back() = uint64_t{1} << (k % 64);
    return r;
}

BigUint BigUint::pow(uint64_t base, uint32_t exp) {
    BigUint acc{1};
    BigUint b{base};
    while (exp != 0) {
        if (exp & 1) acc = acc * b;
        b = b * b;
        exp >>= 1;
    }
    return acc;
}

BigUint BigUint::operator+(const BigUint& rhs) const {
    BigUint r;
    const size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    r.limbs_.resize(n, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        u128 s = carry;
        if (i < limbs_.size()) s += limbs_[i];
        if (i < rhs.limbs_.size()) s += rhs.limbs_[i];
        r.limbs_[i] = static_cast<uint64_t>(s);
        carry = static_cast<uint64_t>(s >> 64);
    }
    if (carry) r.limbs_.push_back(carry);
    return r;
}

BigUint BigUint::operator-(const BigUint& rhs) const {
    if (*this < rhs) throw std::underflow_error("BigUint subtraction underflow");
    BigUint r;
    r.limbs_.resize(limbs_.size(), 0);
    uint64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        u128 lhs = limbs_[i];
        u128 sub = borrow;
        if (i < rhs.limbs_.size()) sub += rhs.limbs_[i];
        if (lhs >= sub) {
            r.limbs_[i] = static_cast<uint64_t>(lhs - sub);
            borrow = 0;
        } else {
            r.limbs_[i] = static_cast<uint64_t>((u128{1} << 64) + lhs - sub);
            borrow = 1;
        }
    }
    r.trim();
    return r;
}

BigUint BigUint::operator*(const BigUint& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    BigUint r;
    r.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
            u128 cur = u128{limbs_[i]} * rhs.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<uint64_t>(cur);
            carry = static_cast<uint64_t>(cur >> 64);
        }
        r.limbs_[i + rhs.limbs_.size()] += carry;
    }
    r.trim();
    return r;
}

BigUint BigUint::operator<<(uint32_t bits) const {
    if (is_zero()) return {};
    const uint32_t words = bits / 64;
    const uint32_t rem = bits % 64;
    BigUint r;
    r.limbs_.assign(limbs_.size() + words + 1, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        r.limbs_[i + words] |= rem ? (limbs_[i] << rem) : limbs_[i];
        if (rem) r.limbs_[i + words + 1] |= limbs_[i] >> (64 - rem);
    }
    r.trim();
    return r;
}

BigUint BigUint::operator>>(uint32_t bits) const {
    const uint32_t words = bits / 64;
    const uint32_t rem = bits % 64;
    if (words >= limbs_.size()) return {};
    BigUint r;
    r.limbs_.assign(limbs_.size() - words, 0);
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
        r.limbs_[i] = limbs_[i + words] >> rem;
        if (rem && i + words + 1 < limbs_.size())
            r.limbs_[i] |= limbs_[i + words + 1] << (64 - rem);
    }
    r.trim();
    return r;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

uint32_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    return static_cast<uint32_t>(64 * (limbs_.size() - 1) +
                                 (64 - std::countl_zero(limbs_.back())));
}

uint32_t BigUint::trailing_zero_bits() const {
    if (limbs_.empty()) return 0;
    uint32_t z = 0;
    for (uint64_t limb : limbs_) {
        if (limb == 0) {
            z += 64;
        } else {
            return z + static_cast<uint32_t>(std::countr_zero(limb));
        }
    }
    return z;
}

uint64_t BigUint::to_u64() const {
    return limbs_.empty() ? 0 : limbs_[0];
}

double BigUint::to_double() const {
    double r = 0.0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        r = r * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    }
    return r;
}

uint64_t BigUint::divmod_small(uint64_t divisor) {
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (u128{rem} << 64) | limbs_[i];
        limbs_[i] = static_cast<uint64_t>(cur / divisor);
        rem = static_cast<uint64_t>(cur % divisor);
    }
    trim();
    return rem;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    constexpr uint64_t kChunk = 10000000000000000000ULL;  // 10^19
    BigUint tmp = *this;
    std::vector<uint64_t> chunks;
    while (!tmp.is_zero()) chunks.push_back(tmp.divmod_small(kChunk));
    std::string out = std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(19 - part.size(), '0') + part;
    }
    return out;
}

BigUint sphere_size(uint32_t n) {
    return BigUint::pow2(n);
}

} // namespace gencase
