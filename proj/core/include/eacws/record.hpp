#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eacws/graph.hpp"

namespace eacws {

// Granular verification outcome. Fields are only meaningful when checked is
// true; a record is never written with claims that were not actually run.
struct VerificationInfo {
    bool checked = false;
    bool classical_conflict_free = false;
    bool gram_identity = false;
    // Recovery condition over {I} + all 3(n+c) single-qubit errors.
    bool kl_single_errors_pass = false;
    std::string kl_first_violation;  // empty when the check passes
    std::size_t certified_distance = 0;  // over all n+c qubits
    bool distance_exact = false;
    std::string distance_witness;
    // Same checks with receiver-side X errors excluded / sender-only support.
    bool kl_sender_model_pass = false;
    std::size_t certified_distance_sender = 0;
    bool distance_sender_exact = false;
    std::string distance_sender_witness;
};

struct SearchInfo {
    bool exact = true;
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
};

struct WordOpRecord {
    std::string codeword;  // "0011001|1" style
    std::string pre;
    std::string post;
};

// Serializable description of one constructed code.
struct CodeRecord {
    int schema = 1;
    std::string name;
    std::size_t n = 0, c = 0, K = 0, d = 0;
    GraphSpec graph;
    std::vector<std::string> generators_g;
    std::vector<std::string> generators_h;
    std::vector<std::string> codewords;
    std::vector<WordOpRecord> word_operators;
    SearchInfo search;
    VerificationInfo verification;
    std::string provenance;
};

std::string record_to_json(const CodeRecord& rec);
CodeRecord record_from_json(const std::string& text);

// Whole-file atomic replacement (temp file + rename).
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Catalog = directory of record JSON files.
struct CatalogEntry {
    std::string file;
    CodeRecord record;
};
// Sorted by (n+c ascending, K descending, name).
std::vector<CatalogEntry> catalog_list(const std::string& dir);

}  // namespace eacws
