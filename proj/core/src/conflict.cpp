#include "eacws/conflict.hpp"

#include <algorithm>
#include <stdexcept>

namespace eacws {

bool ConflictSet::contains(const BitVec& v) const {
    if (v.size() != length) throw std::invalid_argument("pattern length mismatch");
    return contains(v.low_bits());
}

bool ConflictSet::contains(std::uint64_t v) const {
    return membership[v >> 6] >> (v & 63) & 1u;
}

ConflictSet build_conflict_set(const ErrorCatalog& catalog) {
    std::size_t length = catalog.layout.total();
    if (length > 24) throw std::invalid_argument("conflict sets support at most 24 qubits");
    ConflictSet cs;
    cs.length = length;
    cs.membership.assign(((std::size_t{1} << length) + 63) / 64, 0);
    auto add = [&cs](const BitVec& v) {
        if (!v.any()) return;
        std::uint64_t bits = v.low_bits();
        auto& word = cs.membership[bits >> 6];
        if (!(word >> (bits & 63) & 1u)) {
            word |= std::uint64_t{1} << (bits & 63);
            cs.forbidden.push_back(v);
        }
    };
    for (const auto& p : catalog.distinct) add(p);
    for (std::size_t i = 0; i < catalog.distinct.size(); ++i)
        for (std::size_t j = i + 1; j < catalog.distinct.size(); ++j)
            add(catalog.distinct[i] ^ catalog.distinct[j]);
    std::sort(cs.forbidden.begin(), cs.forbidden.end());
    return cs;
}

std::optional<ConflictViolation> verify_code(const ClassicalCode& code, const ConflictSet& conflicts) {
    for (std::size_t i = 0; i < code.codewords.size(); ++i) {
        for (std::size_t j = i + 1; j < code.codewords.size(); ++j) {
            BitVec diff = code.codewords[i] ^ code.codewords[j];
            if (conflicts.contains(diff)) return ConflictViolation{i, j, diff};
        }
    }
    return std::nullopt;
}

}  // namespace eacws
