#pragma once

#include <vector>

#include "eacws/conflict.hpp"
#include "eacws/encoding.hpp"
#include "eacws/generators.hpp"

namespace eacws {

struct WordOperatorPair {
    BitVec codeword;      // length n+c
    PauliOperator pre;    // before encoding: X^x on ancillas, Z^v X^u on the sender ebit block
    PauliOperator post;   // after encoding: identity on receiver qubits
};

// Decomposition of a pre-encoding word operator.
struct PreOpTriple {
    BitVec ancilla_x;  // length n-c
    BitVec ebit_u;     // X pattern on the sender ebit block, length c
    BitVec ebit_v;     // Z pattern on the sender ebit block, length c
};

// Z^codeword with every receiver-side Z cleared by multiplying in generators;
// the result is the identity on receiver qubits. Throws when the receiver
// side cannot be cleared over the generator span.
PauliOperator post_encoding_word_op(const BitVec& codeword, const GeneratorSet& gens);
// U^dagger post U; requires post to be the identity on receiver qubits.
PauliOperator pre_encoding_word_op(const PauliOperator& post, const EncodingMap& map);
PreOpTriple word_op_triple(const PauliOperator& pre);

std::vector<WordOperatorPair> word_operator_table(const ClassicalCode& code,
                                                  const GeneratorSet& gens,
                                                  const EncodingMap& map);

}  // namespace eacws
