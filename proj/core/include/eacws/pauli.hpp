#pragma once

#include <cstdint>
#include <string>

#include "eacws/bitvec.hpp"
#include "eacws/layout.hpp"

namespace eacws {

// Pauli operator on n+c qubits in binary symplectic form: i^phase * X^x Z^z.
// Y denotes the product XZ (x=1, z=1, phase 0). Externally reported operators
// are normalized modulo global phase; the phase is tracked exactly internally.
struct PauliOperator {
    QubitLayout layout;
    BitVec x, z;
    std::uint8_t phase = 0;  // power of i, mod 4

    bool operator==(const PauliOperator&) const = default;
    // Equality modulo global phase.
    bool same_letters(const PauliOperator& o) const {
        return layout == o.layout && x == o.x && z == o.z;
    }
    bool is_identity() const { return x.zero() && z.zero(); }
};

PauliOperator identity_pauli(QubitLayout layout);
// letter in {X, Y, Z}
PauliOperator single_pauli(QubitLayout layout, std::size_t qubit, char letter);

// Product a*b. Phase picks up i^2 for every Z in a crossing an X in b.
PauliOperator pauli_mul(const PauliOperator& a, const PauliOperator& b);
PauliOperator pauli_adjoint(const PauliOperator& a);
bool pauli_commutes(const PauliOperator& a, const PauliOperator& b);
std::size_t pauli_weight(const PauliOperator& p);

// Grammar: optional sign (+, -, i, +i, -i), letters {I,X,Y,Z}, exactly one '|'
// between the sender and receiver segments. Leftmost letter is qubit 1.
PauliOperator parse_pauli(const std::string& s);
PauliOperator parse_pauli(const std::string& s, QubitLayout expect);
// Modulo global phase: no sign is emitted.
std::string format_pauli(const PauliOperator& p);

}  // namespace eacws
