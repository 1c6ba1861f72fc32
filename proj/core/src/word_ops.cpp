#include "eacws/word_ops.hpp"

#include <stdexcept>

#include "eacws/gf2.hpp"

namespace eacws {

namespace {

bool bob_identity(const PauliOperator& p) {
    for (std::size_t q = p.layout.n; q < p.layout.total(); ++q)
        if (p.x.get(q) || p.z.get(q)) return false;
    return true;
}

}  // namespace

PauliOperator post_encoding_word_op(const BitVec& codeword, const GeneratorSet& gens) {
    const auto& layout = gens.layout;
    if (codeword.size() != layout.total()) throw std::invalid_argument("codeword length mismatch");
    PauliOperator w = identity_pauli(layout);
    w.z = codeword;
    if (bob_identity(w)) return w;

    // Solve for the generator subset whose receiver footprint cancels the
    // receiver half of Z^codeword. Only generators that touch the receiver
    // side take part, so the ancilla generators never leak into the result.
    auto all = gens.all();
    std::vector<std::size_t> touching;
    BitMatrix footprints(0, 2 * layout.c);
    for (std::size_t k = 0; k < all.size(); ++k) {
        BitVec fp(2 * layout.c);
        for (std::size_t j = 0; j < layout.c; ++j) {
            fp.set(j, all[k]->x.get(layout.n + j));
            fp.set(layout.c + j, all[k]->z.get(layout.n + j));
        }
        if (!fp.any()) continue;
        touching.push_back(k);
        footprints.rows.push_back(fp);
    }
    BitVec target(2 * layout.c);
    for (std::size_t j = 0; j < layout.c; ++j) target.set(layout.c + j, codeword.get(layout.n + j));
    auto picked = gf2_solve_rows(footprints, target);
    if (!picked)
        throw std::runtime_error("receiver half of the word operator is not clearable over the generator span");
    for (std::size_t idx : *picked) w = pauli_mul(w, *all[touching[idx]]);
    if (!bob_identity(w))
        throw std::runtime_error("receiver half of the word operator did not clear");
    return w;
}

PauliOperator pre_encoding_word_op(const PauliOperator& post, const EncodingMap& map) {
    if (post.layout != map.layout) throw std::invalid_argument("word operator layout mismatch");
    if (!bob_identity(post))
        throw std::invalid_argument("post-encoding word operator must be the identity on receiver qubits");
    return conjugate(map, post, ConjugateDirection::inverse);
}

PreOpTriple word_op_triple(const PauliOperator& pre) {
    const auto& layout = pre.layout;
    if (!bob_identity(pre))
        throw std::invalid_argument("pre-encoding word operator must be the identity on receiver qubits");
    for (std::size_t q = 0; q < layout.ancilla_count(); ++q) {
        if (pre.z.get(q))
            throw std::invalid_argument("pre-encoding word operator carries Z on an ancilla qubit");
    }
    PreOpTriple t{BitVec(layout.ancilla_count()), BitVec(layout.c), BitVec(layout.c)};
    for (std::size_t q = 0; q < layout.ancilla_count(); ++q) t.ancilla_x.set(q, pre.x.get(q));
    for (std::size_t j = 0; j < layout.c; ++j) {
        t.ebit_u.set(j, pre.x.get(layout.ancilla_count() + j));
        t.ebit_v.set(j, pre.z.get(layout.ancilla_count() + j));
    }
    return t;
}

std::vector<WordOperatorPair> word_operator_table(const ClassicalCode& code,
                                                  const GeneratorSet& gens,
                                                  const EncodingMap& map) {
    if (code.length != gens.layout.total())
        throw std::invalid_argument("classical code length must equal the qubit count");
    std::vector<WordOperatorPair> table;
    table.reserve(code.codewords.size());
    for (const auto& w : code.codewords) {
        auto post = post_encoding_word_op(w, gens);
        auto pre = pre_encoding_word_op(post, map);
        table.push_back(WordOperatorPair{w, pre, post});
    }
    return table;
}

}  // namespace eacws
