#pragma once

#include <vector>

#include "eacws/graph.hpp"
#include "eacws/pauli.hpp"

namespace eacws {

// Stabilizer generator lists. In the encoded standard form g[i] is the unique
// generator whose X column is Alice qubit i, and h[j] the one whose X column
// is Bob qubit j; reductions rely on that structure.
struct GeneratorSet {
    QubitLayout layout;
    std::vector<PauliOperator> g;  // size n
    std::vector<PauliOperator> h;  // size c

    const PauliOperator& with_x_at(std::size_t qubit) const;
    std::vector<const PauliOperator*> all() const;
};

// Stabilizers of |0>^(n-c) (x) |Phi+>^c before encoding: n-c ancilla Z's,
// then c Z(x)Z ebit pairs in the g list; c X(x)X ebit pairs in the h list.
GeneratorSet initial_generators(QubitLayout layout);

// Post-encoding generators for the given sender-side graph:
//   g[i] = X at Alice i, Z at each graph neighbor, plus Z at Bob j for i = n-c+j;
//   h[j] = Z at Alice n-c+j, X at Bob j.
GeneratorSet encoded_generators(QubitLayout layout, const GraphSpec& graph);

// Pairwise commutation and GF(2) independence; single-X standard form when
// expect_single_x. Throws std::invalid_argument describing the violation.
void validate_generators(const GeneratorSet& gens, bool expect_single_x);

}  // namespace eacws
