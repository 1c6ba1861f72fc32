#include "eacws/encoding.hpp"

#include <stdexcept>

namespace eacws {

namespace {

// H on qubit q: X <-> Z, Y -> -Y.
void conj_hadamard(PauliOperator& p, std::size_t q) {
    bool xq = p.x.get(q), zq = p.z.get(q);
    if (xq && zq) p.phase = static_cast<std::uint8_t>((p.phase + 2) & 3);
    p.x.set(q, zq);
    p.z.set(q, xq);
}

// CZ(a,b): X_a -> X_a Z_b, X_b -> X_b Z_a, Z fixed; Y_a Y_b style overlaps
// pick up a sign.
void conj_cz(PauliOperator& p, std::size_t a, std::size_t b) {
    bool xa = p.x.get(a), xb = p.x.get(b);
    if (xb) p.z.flip(a);
    if (xa) p.z.flip(b);
    if (xa && xb) p.phase = static_cast<std::uint8_t>((p.phase + 2) & 3);
}

}  // namespace

EncodingMap build_encoding_map(QubitLayout layout, const GraphSpec& graph) {
    if (graph.n != layout.n)
        throw std::invalid_argument("graph vertex count must equal the sender qubit count");
    return EncodingMap{layout, graph};
}

PauliOperator conjugate(const EncodingMap& map, PauliOperator p, ConjugateDirection dir) {
    if (p.layout != map.layout) throw std::invalid_argument("pauli layout mismatch");
    if (dir == ConjugateDirection::forward) {
        for (std::size_t q = 0; q < map.layout.n; ++q) conj_hadamard(p, q);
        for (auto [a, b] : map.graph.edges) conj_cz(p, a, b);
    } else {
        for (auto [a, b] : map.graph.edges) conj_cz(p, a, b);
        for (std::size_t q = 0; q < map.layout.n; ++q) conj_hadamard(p, q);
    }
    return p;
}

BitMatrix symplectic_matrix(const EncodingMap& map, ConjugateDirection dir) {
    std::size_t total = map.layout.total();
    BitMatrix m(0, 2 * total);
    for (std::size_t basis = 0; basis < 2 * total; ++basis) {
        PauliOperator p = identity_pauli(map.layout);
        if (basis < total)
            p.x.set(basis, true);
        else
            p.z.set(basis - total, true);
        p = conjugate(map, p, dir);
        BitVec row(2 * total);
        for (std::size_t q = 0; q < total; ++q) {
            row.set(q, p.x.get(q));
            row.set(total + q, p.z.get(q));
        }
        m.rows.push_back(row);
    }
    return m;
}

}  // namespace eacws
