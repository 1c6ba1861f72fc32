#include "eacws/bitvec.hpp"

#include <bit>
#include <stdexcept>

#include "eacws/layout.hpp"

namespace eacws {

BitVec::BitVec(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

BitVec BitVec::from_string(const std::string& s) {
    std::string flat;
    flat.reserve(s.size());
    for (char ch : s) {
        if (ch == '|') continue;
        if (ch != '0' && ch != '1') throw std::invalid_argument("bitstring may contain only 0, 1 and |");
        flat.push_back(ch);
    }
    BitVec v(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) v.set(i, flat[i] == '1');
    return v;
}

BitVec BitVec::from_bits(std::size_t len, std::uint64_t bits) {
    if (len > 64) throw std::invalid_argument("from_bits supports at most 64 positions");
    BitVec v(len);
    if (len > 0) v.w_[0] = len == 64 ? bits : (bits & ((std::uint64_t{1} << len) - 1));
    return v;
}

bool BitVec::get(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("bit index out of range");
    return (w_[i / 64] >> (i % 64)) & 1;
}

void BitVec::set(std::size_t i, bool v) {
    if (i >= len_) throw std::out_of_range("bit index out of range");
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
        w_[i / 64] |= mask;
    else
        w_[i / 64] &= ~mask;
}

void BitVec::flip(std::size_t i) { set(i, !get(i)); }

void BitVec::require_same_length(const BitVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("bit vector length mismatch");
}

BitVec& BitVec::operator^=(const BitVec& o) {
    require_same_length(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVec::dot(const BitVec& o) const {
    require_same_length(o);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

std::size_t BitVec::weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : w_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVec::any() const {
    for (std::uint64_t word : w_)
        if (word != 0) return true;
    return false;
}

std::uint64_t BitVec::low_bits() const {
    if (len_ > 64) throw std::invalid_argument("low_bits requires at most 64 positions");
    return w_.empty() ? 0 : w_[0];
}

bool BitVec::operator<(const BitVec& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t diff = w_[i] ^ o.w_[i];
        if (diff != 0) {
            // The vector with 0 at the first differing position is smaller.
            std::uint64_t lowest = diff & (~diff + 1);
            return (w_[i] & lowest) == 0;
        }
    }
    return false;
}

std::string BitVec::str() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::string BitVec::str_split(std::size_t split) const {
    std::string s = str();
    if (split > s.size()) throw std::invalid_argument("split position beyond length");
    s.insert(split, 1, '|');
    return s;
}

BitVec parse_bits(const std::string& s) { return BitVec::from_string(s); }

BitVec parse_bits(const std::string& s, std::size_t expect_len, std::size_t expect_split) {
    auto bar = s.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("bitstring is missing the '|' separator");
    if (s.find('|', bar + 1) != std::string::npos)
        throw std::invalid_argument("bitstring has more than one '|' separator");
    if (bar != expect_split) throw std::invalid_argument("'|' separator is not at the sender/receiver boundary");
    BitVec v = BitVec::from_string(s);
    if (v.size() != expect_len) throw std::invalid_argument("bitstring length mismatch");
    return v;
}

QubitLayout make_layout(std::size_t n, std::size_t c) {
    if (n < 1) throw std::invalid_argument("layout requires n >= 1");
    if (c > n) throw std::invalid_argument("layout requires c <= n");
    return QubitLayout{n, c};
}

}  // namespace eacws
