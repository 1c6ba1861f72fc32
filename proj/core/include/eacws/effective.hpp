#pragma once

#include <utility>
#include <vector>

#include "eacws/generators.hpp"

namespace eacws {

// Z-only residue left after multiplying an error by the generator that cancels
// each of its X columns. Phases are dropped: patterns identify error cosets.
struct EffectiveError {
    BitVec pattern;  // length n+c

    bool operator==(const EffectiveError&) const = default;
};

// Requires the single-X standard form; linear in (x, z).
EffectiveError reduce_to_effective(const PauliOperator& e, const GeneratorSet& gens);

// All 3(n+c) weight-one Paulis, position-major, X then Y then Z per position.
std::vector<PauliOperator> enumerate_single_errors(QubitLayout layout);
// All Paulis of weight 1..max_weight, ascending weight, support lexicographic,
// letter pattern in X<Y<Z order. max_weight 1 gives enumerate_single_errors.
std::vector<PauliOperator> enumerate_errors_up_to_weight(QubitLayout layout, std::size_t max_weight);

struct ErrorCatalog {
    QubitLayout layout;
    // In error_set order; deterministic for a given input.
    std::vector<std::pair<PauliOperator, EffectiveError>> entries;
    // Sorted distinct patterns; contains the zero pattern iff identity was in the set.
    std::vector<BitVec> distinct;
    // (receiver-side error, sender-side error) sharing one effective pattern.
    std::vector<std::pair<PauliOperator, PauliOperator>> equivalence_pairs;

    std::size_t distinct_nonzero() const;
};

ErrorCatalog build_error_catalog(const GeneratorSet& gens, const std::vector<PauliOperator>& error_set);

}  // namespace eacws
