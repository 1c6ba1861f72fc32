#include "eacws/generators.hpp"

#include <sstream>
#include <stdexcept>

#include "eacws/gf2.hpp"

namespace eacws {

const PauliOperator& GeneratorSet::with_x_at(std::size_t qubit) const {
    if (layout.is_alice(qubit)) return g[qubit];
    if (layout.is_bob(qubit)) return h[qubit - layout.n];
    throw std::out_of_range("qubit index out of range");
}

std::vector<const PauliOperator*> GeneratorSet::all() const {
    std::vector<const PauliOperator*> out;
    out.reserve(g.size() + h.size());
    for (const auto& p : g) out.push_back(&p);
    for (const auto& p : h) out.push_back(&p);
    return out;
}

GeneratorSet initial_generators(QubitLayout layout) {
    GeneratorSet gens{layout, {}, {}};
    for (std::size_t i = 0; i < layout.ancilla_count(); ++i)
        gens.g.push_back(single_pauli(layout, i, 'Z'));
    for (std::size_t j = 0; j < layout.c; ++j) {
        auto zz = single_pauli(layout, layout.ancilla_count() + j, 'Z');
        zz.z.set(layout.n + j, true);
        gens.g.push_back(zz);
        auto xx = single_pauli(layout, layout.ancilla_count() + j, 'X');
        xx.x.set(layout.n + j, true);
        gens.h.push_back(xx);
    }
    return gens;
}

GeneratorSet encoded_generators(QubitLayout layout, const GraphSpec& graph) {
    if (graph.n != layout.n)
        throw std::invalid_argument("graph vertex count must equal the sender qubit count");
    auto adj = graph.neighbor_lists();
    GeneratorSet gens{layout, {}, {}};
    for (std::size_t i = 0; i < layout.n; ++i) {
        auto p = single_pauli(layout, i, 'X');
        for (std::size_t nb : adj[i]) p.z.set(nb, true);
        if (i >= layout.ancilla_count()) p.z.set(layout.n + (i - layout.ancilla_count()), true);
        gens.g.push_back(p);
    }
    for (std::size_t j = 0; j < layout.c; ++j) {
        auto p = single_pauli(layout, layout.n + j, 'X');
        p.z.set(layout.ancilla_count() + j, true);
        gens.h.push_back(p);
    }
    return gens;
}

void validate_generators(const GeneratorSet& gens, bool expect_single_x) {
    auto all = gens.all();
    std::size_t total = gens.layout.total();
    if (all.size() != total)
        throw std::invalid_argument("expected n+c generators");
    for (std::size_t a = 0; a < all.size(); ++a) {
        if (all[a]->layout != gens.layout)
            throw std::invalid_argument("generator layout mismatch");
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            if (!pauli_commutes(*all[a], *all[b])) {
                std::ostringstream os;
                os << "generators " << a << " and " << b << " anticommute";
                throw std::invalid_argument(os.str());
            }
        }
    }
    BitMatrix symp(0, 2 * total);
    for (const auto* p : all) {
        BitVec row(2 * total);
        for (std::size_t q = 0; q < total; ++q) {
            row.set(q, p->x.get(q));
            row.set(total + q, p->z.get(q));
        }
        symp.rows.push_back(row);
    }
    if (gf2_rank(symp) != all.size())
        throw std::invalid_argument("generators are not independent over GF(2)");
    if (expect_single_x) {
        for (std::size_t q = 0; q < total; ++q) {
            const auto& p = gens.with_x_at(q);
            if (p.x.weight() != 1 || !p.x.get(q)) {
                std::ostringstream os;
                os << "generator for qubit " << q << " lacks the single-X form";
                throw std::invalid_argument(os.str());
            }
        }
    }
}

}  // namespace eacws
