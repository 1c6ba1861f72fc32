#pragma once

#include "eacws/clique.hpp"
#include "eacws/effective.hpp"
#include "eacws/encoding.hpp"
#include "eacws/kl.hpp"
#include "eacws/record.hpp"
#include "eacws/word_ops.hpp"

namespace eacws {

// Everything derived from (n, c, graph, d) up to the classical search input.
struct ConstructedCode {
    QubitLayout layout;
    GraphSpec graph;
    std::size_t d = 3;
    GeneratorSet generators;
    EncodingMap map;
    std::vector<PauliOperator> error_set;  // {I} + weight <= (d-1)/2
    ErrorCatalog catalog;
    ConflictSet conflicts;
};

// d must be odd and >= 3.
ConstructedCode construct_code(std::size_t n, std::size_t c, const GraphSpec& graph, std::size_t d = 3);

// Full dense-state verification of a classical code against a construction.
// Runs the word-operator synthesis, Gram check, the recovery condition over
// the full single-error model, the receiver-X-excluded model, and both
// distance certifications. Requires n+c <= 14.
VerificationInfo verify_constructed(const ConstructedCode& cc, const ClassicalCode& code, double tol = 1e-9);

// Assembles a record (word operators included) from a search result.
CodeRecord make_record(const ConstructedCode& cc, const SearchResult& sr,
                       const std::string& name, const std::string& provenance,
                       bool run_verification);

// Rebuilds the construction from a record's parameters and checks the stored
// generators, codewords and word operators against it before verifying.
// Returns the fresh verification; throws on structural mismatch.
VerificationInfo verify_record(const CodeRecord& rec, double tol = 1e-9);

}  // namespace eacws
