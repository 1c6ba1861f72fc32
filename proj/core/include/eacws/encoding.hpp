#pragma once

#include "eacws/gf2.hpp"
#include "eacws/graph.hpp"
#include "eacws/pauli.hpp"

namespace eacws {

enum class ConjugateDirection { forward, inverse };

// Conjugation action of the encoding unitary U = CZ(all sender graph edges)
// composed after H(every sender qubit). Forward maps P to U P U^dagger.
// Acts as the identity on receiver qubits.
struct EncodingMap {
    QubitLayout layout;
    GraphSpec graph;
};

EncodingMap build_encoding_map(QubitLayout layout, const GraphSpec& graph);
PauliOperator conjugate(const EncodingMap& map, PauliOperator p, ConjugateDirection dir);
// The 2(n+c) x 2(n+c) GF(2) action on (x|z) row vectors, for property checks.
BitMatrix symplectic_matrix(const EncodingMap& map, ConjugateDirection dir);

}  // namespace eacws
