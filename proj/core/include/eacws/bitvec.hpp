#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace eacws {

// Fixed-length bit vector over GF(2), packed into 64-bit words.
// Position 0 is the leftmost character in string form.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t len);

    // Accepts '0'/'1' with optional '|' separators (ignored).
    static BitVec from_string(const std::string& s);
    // Low bit of `bits` becomes position 0. Requires len <= 64.
    static BitVec from_bits(std::size_t len, std::uint64_t bits);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool v);
    void flip(std::size_t i);

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    // Parity of the AND with o.
    bool dot(const BitVec& o) const;
    std::size_t weight() const;
    bool any() const;
    bool zero() const { return !any(); }

    // First 64 bits as an integer (position 0 = low bit). Requires len <= 64.
    std::uint64_t low_bits() const;

    bool operator==(const BitVec&) const = default;
    // Lexicographic on the string form: position 0 is most significant.
    bool operator<(const BitVec& o) const;

    std::string str() const;
    // String form with a '|' inserted after `split` characters.
    std::string str_split(std::size_t split) const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;

    void require_same_length(const BitVec& o) const;
};

// Parses "0000010|00"; the '|' position is checked against `split` when >= 0.
BitVec parse_bits(const std::string& s);
BitVec parse_bits(const std::string& s, std::size_t expect_len, std::size_t expect_split);

}  // namespace eacws
