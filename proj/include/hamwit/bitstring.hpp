#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hamwit/nat.hpp"

namespace hamwit {

// Fixed-length binary string. Bit 0 is the most significant (leftmost)
// digit, so lexicographic order on equal lengths coincides with numeric
// order of the integer value.
class BitString {
  public:
    BitString() = default;
    explicit BitString(std::size_t length) : bits_(length, 0) {}

    static BitString parse(std::string_view s) {
        BitString b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '0' && s[i] != '1')
                throw std::invalid_argument("bit string digit must be 0 or 1");
            b.bits_[i] = static_cast<std::uint8_t>(s[i] - '0');
        }
        return b;
    }

    static BitString from_value(const Nat& value, std::size_t length) {
        if (value < 0 || value >= pow2(length))
            throw std::invalid_argument("value does not fit in length bits");
        BitString b(length);
        for (std::size_t i = 0; i < length; ++i)
            b.bits_[i] = boost::multiprecision::bit_test(value, unsigned(length - 1 - i)) ? 1 : 0;
        return b;
    }

    // fast path for brute-force scans
    static BitString from_value_u64(std::uint64_t value, std::size_t length) {
        if (length < 64 && (value >> length) != 0)
            throw std::invalid_argument("value does not fit in length bits");
        BitString b(length);
        for (std::size_t i = 0; i < length; ++i)
            b.bits_[i] = static_cast<std::uint8_t>((value >> (length - 1 - i)) & 1u);
        return b;
    }

    static BitString all_ones(std::size_t length) {
        BitString b(length);
        for (auto& x : b.bits_) x = 1;
        return b;
    }

    std::size_t length() const { return bits_.size(); }
    bool bit(std::size_t i) const { return bits_[i] != 0; }
    void set_bit(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
    void flip(std::size_t i) { bits_[i] ^= 1; }

    Nat value() const {
        Nat v = 0;
        for (std::uint8_t d : bits_) {
            v <<= 1;
            v += d;
        }
        return v;
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::uint8_t d : bits_) w += d;
        return w;
    }

    BitString prefix(std::size_t len) const {
        if (len > bits_.size()) throw std::invalid_argument("prefix longer than string");
        BitString b(len);
        std::copy(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(len), b.bits_.begin());
        return b;
    }

    std::string str() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = char('0' + bits_[i]);
        return s;
    }

    friend bool operator==(const BitString& a, const BitString& b) = default;
    friend bool operator<(const BitString& a, const BitString& b) { return a.bits_ < b.bits_; }

  private:
    std::vector<std::uint8_t> bits_;
};

inline std::size_t hamming_distance(const BitString& x, const BitString& y) {
    if (x.length() != y.length()) throw std::invalid_argument("unequal lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.length(); ++i) d += x.bit(i) != y.bit(i);
    return d;
}

}  // namespace hamwit
