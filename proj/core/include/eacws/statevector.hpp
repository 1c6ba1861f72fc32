#pragma once

#include <complex>
#include <vector>

#include "eacws/encoding.hpp"

namespace eacws {

// Dense 2^(n+c) state vector; amplitude index bit q is qubit q.
struct StateVector {
    std::size_t num_qubits = 0;
    std::vector<std::complex<double>> amp;

    double norm() const;
};

// |0>^(n-c) on the ancillas with |Phi+> across each (Alice n-c+j, Bob j)
// pair. Requires n+c <= 14.
StateVector base_state(QubitLayout layout);

void apply_pauli(StateVector& sv, const PauliOperator& p);
void apply_hadamard(StateVector& sv, std::size_t q);
void apply_cz(StateVector& sv, std::size_t a, std::size_t b);
// The encoding circuit (forward) or its inverse on the sender qubits.
void apply_encoding(StateVector& sv, const EncodingMap& map, ConjugateDirection dir);

std::complex<double> inner(const StateVector& a, const StateVector& b);

}  // namespace eacws
