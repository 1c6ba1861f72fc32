#pragma once

#include <cstddef>

namespace eacws {

// Qubit layout of an entanglement-assisted code. Alice (the sender) holds
// qubits 0..n-1; Bob (the receiver) holds the ebit halves n..n+c-1. Alice
// qubits 0..n-c-1 start as |0> ancillas, Alice qubit n-c+j is entangled
// with Bob qubit j. Displayed indices are 1-based per side.
struct QubitLayout {
    std::size_t n = 0;  // sender qubits
    std::size_t c = 0;  // ebits

    std::size_t total() const { return n + c; }
    std::size_t ancilla_count() const { return n - c; }
    bool is_alice(std::size_t q) const { return q < n; }
    bool is_bob(std::size_t q) const { return q >= n && q < n + c; }

    bool operator==(const QubitLayout&) const = default;
};

QubitLayout make_layout(std::size_t n, std::size_t c);

inline constexpr std::size_t kMaxDenseQubits = 14;

}  // namespace eacws
