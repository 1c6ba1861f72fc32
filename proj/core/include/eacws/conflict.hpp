#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eacws/effective.hpp"

namespace eacws {

// Forbidden pairwise-difference patterns for the classical codeword search:
// every XOR of two distinct effective errors plus every nonzero effective
// error. Never contains the zero pattern.
struct ConflictSet {
    std::size_t length = 0;
    std::vector<BitVec> forbidden;           // sorted distinct
    std::vector<std::uint64_t> membership;   // bitset over {0,1}^length

    bool contains(const BitVec& v) const;
    bool contains(std::uint64_t v) const;
};

// Requires catalog length <= 24.
ConflictSet build_conflict_set(const ErrorCatalog& catalog);

// Binary code over {0,1}^(n+c); by convention contains the all-zero word.
struct ClassicalCode {
    std::size_t length = 0;
    std::vector<BitVec> codewords;  // sorted lexicographically

    std::size_t K() const { return codewords.size(); }
};

struct ConflictViolation {
    std::size_t i = 0, j = 0;  // codeword indices, i < j
    BitVec difference;
};

// Empty result means every pairwise difference avoids the forbidden set.
std::optional<ConflictViolation> verify_code(const ClassicalCode& code, const ConflictSet& conflicts);

}  // namespace eacws
