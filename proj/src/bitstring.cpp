#include "gencase/bitstring.hpp"

#include <stdexcept>

namespace gencase {

BitString BitString::parse(const std::string& text) {
    std::vector<uint8_t> bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("BitString::parse: expected only '0'/'1', got '" +
                                        std::string(1, ch) + "'");
        bits.push_back(ch == '1' ? 1 : 0);
    }
    return BitString(std::move(bits));
}

BitString BitString::from_index(uint64_t index, uint32_t n) {
    std::vector<uint8_t> bits(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
        bits[i] = static_cast<uint8_t>((index >> (n - 1 - i)) & 1);
    }
    return BitString(std::move(bits));
}

uint64_t BitString::to_index() const {
    if (bits_.size() > 64) throw std::length_error("BitString::to_index: longer than 64 bits");
    uint64_t v = 0;
    for (uint8_t b : bits_) v = (v << 1) | b;
    return v;
}

BitString BitString::slice(uint32_t begin, uint32_t count) const {
    if (begin + count > bits_.size()) throw std::out_of_range("BitString::slice");
    return BitString(std::vector<uint8_t>(bits_.begin() + begin, bits_.begin() + begin + count));
}

BitString BitString::concat(const BitString& rhs) const {
    std::vector<uint8_t> bits = bits_;
    bits.insert(bits.end(), rhs.bits_.begin(), rhs.bits_.end());
    return BitString(std::move(bits));
}

BitString BitString::flipped() const {
    std::vector<uint8_t> bits = bits_;
    for (auto& b : bits) b ^= 1;
    return BitString(std::move(bits));
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (uint8_t b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

uint64_t BitString::content_hash() const {
    // FNV-1a over bits, then a final avalanche; length folded in first so
    // "0" and "00" hash apart.
    uint64_t h = 1469598103934665603ULL ^ (uint64_t{bits_.size()} * 0x9E3779B97F4A7C15ULL);
    for (uint8_t b : bits_) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    h ^= h >> 30;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 27;
    h *= 0x94D049BB133111EBULL;
    h ^= h >> 31;
    return h;
}

} // namespace gencase
