#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gencase {

/// A finite binary string with explicit length. Bit 0 is the leftmost
/// ("first") bit. Immutable value type; equality is bit-for-bit.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<uint8_t> bits) : bits_(std::move(bits)) {}

    /// Parse "0101"; throws std::invalid_argument on other characters.
    static BitString parse(const std::string& text);

    /// The length-n string whose big-endian integer value is `index`.
    /// This is the canonical enumeration order of the sphere: index 0 is
    /// 0^n, index 2^n - 1 is 1^n, and the first bit is the most significant.
    static BitString from_index(uint64_t index, uint32_t n);

    static BitString zeros(uint32_t n) { return BitString(std::vector<uint8_t>(n, 0)); }
    static BitString ones(uint32_t n) { return BitString(std::vector<uint8_t>(n, 1)); }

    uint32_t size() const { return static_cast<uint32_t>(bits_.size()); }
    bool empty() const { return bits_.empty(); }
    uint8_t bit(uint32_t i) const { return bits_[i]; }

    /// Big-endian integer value; requires size() <= 64.
    uint64_t to_index() const;

    BitString slice(uint32_t begin, uint32_t count) const;
    BitString concat(const BitString& rhs) const;
    BitString flipped() const;  // every bit inverted

    bool operator==(const BitString& rhs) const = default;
    std::string to_string() const;

    /// 64-bit content hash (length-sensitive); used to derive per-input
    /// random streams.
    uint64_t content_hash() const;

    const std::vector<uint8_t>& bits() const { return bits_; }

private:
    std::vector<uint8_t> bits_;
};

} // namespace gencase
