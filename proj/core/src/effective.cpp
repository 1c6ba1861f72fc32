#include "eacws/effective.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eacws {

EffectiveError reduce_to_effective(const PauliOperator& e, const GeneratorSet& gens) {
    if (e.layout != gens.layout) throw std::invalid_argument("error layout mismatch");
    BitVec pattern = e.z;
    for (std::size_t q = 0; q < e.layout.total(); ++q) {
        if (!e.x.get(q)) continue;
        const auto& gen = gens.with_x_at(q);
        if (gen.x.weight() != 1 || !gen.x.get(q))
            throw std::invalid_argument("generator set lacks the single-X standard form");
        pattern ^= gen.z;
    }
    return EffectiveError{pattern};
}

std::vector<PauliOperator> enumerate_single_errors(QubitLayout layout) {
    std::vector<PauliOperator> out;
    out.reserve(3 * layout.total());
    for (std::size_t q = 0; q < layout.total(); ++q)
        for (char letter : {'X', 'Y', 'Z'}) out.push_back(single_pauli(layout, q, letter));
    return out;
}

std::vector<PauliOperator> enumerate_errors_up_to_weight(QubitLayout layout, std::size_t max_weight) {
    std::vector<PauliOperator> out;
    std::size_t total = layout.total();
    for (std::size_t w = 1; w <= std::min(max_weight, total); ++w) {
        // Ascending support combinations.
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; ++i) support[i] = i;
        while (true) {
            // Base-3 odometer over letters, leftmost position most significant.
            std::vector<unsigned> letters(w, 0);
            while (true) {
                PauliOperator p = identity_pauli(layout);
                for (std::size_t i = 0; i < w; ++i) {
                    static const char kLetters[3] = {'X', 'Y', 'Z'};
                    auto s = single_pauli(layout, support[i], kLetters[letters[i]]);
                    p.x ^= s.x;
                    p.z ^= s.z;
                }
                out.push_back(p);
                std::size_t i = w;
                while (i > 0 && letters[i - 1] == 2) letters[--i] = 0;
                if (i == 0) break;
                ++letters[i - 1];
            }
            std::size_t i = w;
            while (i > 0 && support[i - 1] == total - (w - (i - 1))) --i;
            if (i == 0) break;
            ++support[i - 1];
            for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
        }
    }
    return out;
}

std::size_t ErrorCatalog::distinct_nonzero() const {
    std::size_t k = 0;
    for (const auto& p : distinct)
        if (p.any()) ++k;
    return k;
}

namespace {

bool support_on_side(const PauliOperator& p, bool bob) {
    for (std::size_t q = 0; q < p.layout.total(); ++q) {
        if (!p.x.get(q) && !p.z.get(q)) continue;
        if (p.layout.is_bob(q) != bob) return false;
    }
    return !p.is_identity();
}

}  // namespace

ErrorCatalog build_error_catalog(const GeneratorSet& gens, const std::vector<PauliOperator>& error_set) {
    ErrorCatalog cat;
    cat.layout = gens.layout;
    std::map<BitVec, std::vector<std::size_t>> by_pattern;
    for (const auto& e : error_set) {
        auto eff = reduce_to_effective(e, gens);
        by_pattern[eff.pattern].push_back(cat.entries.size());
        cat.entries.emplace_back(e, eff);
    }
    for (const auto& [pattern, idx] : by_pattern) {
        cat.distinct.push_back(pattern);
        for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                const auto& pa = cat.entries[idx[a]].first;
                const auto& pb = cat.entries[idx[b]].first;
                if (support_on_side(pa, true) && support_on_side(pb, false))
                    cat.equivalence_pairs.emplace_back(pa, pb);
                else if (support_on_side(pb, true) && support_on_side(pa, false))
                    cat.equivalence_pairs.emplace_back(pb, pa);
            }
        }
    }
    return cat;
}

}  // namespace eacws
