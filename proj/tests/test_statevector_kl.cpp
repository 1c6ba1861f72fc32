#include <doctest.h>

#include <cmath>
#include <random>

#include <eacws/effective.hpp>
#include <eacws/fixtures.hpp>
#include <eacws/generators.hpp>
#include <eacws/graph.hpp>
#include <eacws/kl.hpp>
#include <eacws/statevector.hpp>
#include <eacws/word_ops.hpp>

using eacws::BitVec;
using eacws::ClassicalCode;
using eacws::CodeRecord;
using eacws::EncodingMap;
using eacws::GeneratorSet;
using eacws::PauliOperator;
using eacws::QubitLayout;
using eacws::StateVector;

namespace {

struct Instance {
    QubitLayout layout;
    GeneratorSet gens;
    EncodingMap map;
    ClassicalCode code;
    std::vector<eacws::WordOperatorPair> table;
    std::vector<StateVector> states;
};

Instance load(const std::string& fixture) {
    CodeRecord rec = eacws::load_fixture_record(fixture);
    Instance inst;
    inst.layout = eacws::make_layout(rec.n, rec.c);
    eacws::GraphSpec graph = rec.graph.kind == "ring"
                                 ? eacws::ring_graph(rec.graph.n)
                                 : eacws::custom_graph(rec.graph.n, rec.graph.edges);
    inst.gens = eacws::encoded_generators(inst.layout, graph);
    inst.map = eacws::build_encoding_map(inst.layout, graph);
    inst.code.length = rec.n + rec.c;
    for (const std::string& w : rec.codewords)
        inst.code.codewords.push_back(eacws::parse_bits(w, rec.n + rec.c, rec.n));
    inst.table = eacws::word_operator_table(inst.code, inst.gens, inst.map);
    StateVector base = eacws::base_state(inst.layout);
    eacws::apply_encoding(base, inst.map, eacws::ConjugateDirection::forward);
    inst.states = eacws::codeword_states(inst.table, base);
    return inst;
}

// Sender-side single errors plus receiver Z errors: the model in which the
// receiver halves can only dephase.
std::vector<PauliOperator> sender_model_singles(QubitLayout layout) {
    std::vector<PauliOperator> out;
    for (const PauliOperator& e : eacws::enumerate_single_errors(layout)) {
        bool receiver_x = false;
        for (std::size_t q = layout.n; q < layout.total(); ++q)
            if (e.x.get(q)) receiver_x = true;
        if (!receiver_x) out.push_back(e);
    }
    return out;
}

}  // namespace

TEST_CASE("encoded base state is stabilized by every generator") {
    for (const char* name : {"paper-7-9-3-2", "paper-9-20-3-1", "paper-6-4-3-1"}) {
        CAPTURE(name);
        Instance inst = load(name);
        StateVector base = eacws::base_state(inst.layout);
        eacws::apply_encoding(base, inst.map, eacws::ConjugateDirection::forward);
        CHECK(base.norm() == doctest::Approx(1.0).epsilon(1e-12));
        for (const PauliOperator* s : inst.gens.all()) {
            StateVector moved = base;
            eacws::apply_pauli(moved, *s);
            // <base| S |base> = 1 exactly for a stabilizer.
            CHECK(std::abs(eacws::inner(base, moved) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("codeword states are generator eigenvectors with codeword signs") {
    Instance inst = load("paper-6-4-3-1");
    auto all = inst.gens.all();
    for (std::size_t k = 0; k < inst.states.size(); ++k) {
        const BitVec& w = inst.code.codewords[k];
        for (std::size_t q = 0; q < inst.layout.total(); ++q) {
            StateVector moved = inst.states[k];
            eacws::apply_pauli(moved, *all[q]);
            // Word w flips the generator with X at position q iff w_q = 1.
            double want = w.get(q) ? -1.0 : 1.0;
            CHECK(std::abs(eacws::inner(inst.states[k], moved) - want) < 1e-12);
        }
    }
}

TEST_CASE("codeword states are orthonormal") {
    for (const char* name : {"paper-7-9-3-2", "paper-6-4-3-1"}) {
        CAPTURE(name);
        Instance inst = load(name);
        for (std::size_t i = 0; i < inst.states.size(); ++i)
            for (std::size_t j = 0; j < inst.states.size(); ++j) {
                std::complex<double> v = eacws::inner(inst.states[i], inst.states[j]);
                CHECK(std::abs(v - (i == j ? 1.0 : 0.0)) < 1e-12);
            }
    }
}

TEST_CASE("recovery holds for sender model singles") {
    for (const char* name : {"paper-7-9-3-2", "paper-6-4-3-1"}) {
        CAPTURE(name);
        Instance inst = load(name);
        auto errors = sender_model_singles(inst.layout);
        errors.insert(errors.begin(), eacws::identity_pauli(inst.layout));
        eacws::KLReport report = eacws::kl_check(inst.states, errors);
        CHECK(report.pass);
        CHECK(report.violations.empty());
        // C matrix is Hermitian.
        for (std::size_t a = 0; a < errors.size(); ++a)
            for (std::size_t b = 0; b < errors.size(); ++b)
                CHECK(std::abs(report.c_matrix[a][b] - std::conj(report.c_matrix[b][a])) < 1e-9);
    }
}

TEST_CASE("receiver bit flips collide with sender dephasing") {
    // X on a receiver half and Z on the matching sender qubit act identically
    // on the code space, so the full single-error set fails the recovery
    // condition at exactly that pair.
    Instance inst = load("paper-6-4-3-1");
    auto errors = eacws::enumerate_single_errors(inst.layout);
    errors.insert(errors.begin(), eacws::identity_pauli(inst.layout));
    eacws::KLReport report = eacws::kl_check(inst.states, errors);
    CHECK_FALSE(report.pass);
    REQUIRE_FALSE(report.violations.empty());
    const eacws::KLViolation& first = report.violations.front();
    CHECK(first.diagonal);
    std::string ea = eacws::format_pauli(errors[first.error_a]);
    std::string eb = eacws::format_pauli(errors[first.error_b]);
    // The colliding pair: Z on the sender half or X on the receiver half.
    CHECK(ea == "IIIIIZ|I");
    CHECK(eb == "IIIIII|X");
}

TEST_CASE("single qubit mutations break a stored state set") {
    std::mt19937 rng(2024);
    for (const char* name : {"paper-7-9-3-2", "paper-6-4-3-1"}) {
        CAPTURE(name);
        Instance inst = load(name);
        auto errors = sender_model_singles(inst.layout);
        errors.insert(errors.begin(), eacws::identity_pauli(inst.layout));
        for (int trial = 0; trial < 10; ++trial) {
            // Corrupt one codeword state with a random sender-side error of
            // weight 1: recovery must now fail.
            auto states = inst.states;
            std::size_t victim = rng() % states.size();
            std::size_t qubit = rng() % inst.layout.n;
            char letter = "XYZ"[rng() % 3];
            eacws::apply_pauli(states[victim],
                              eacws::single_pauli(inst.layout, qubit, letter));
            eacws::KLReport broken = eacws::kl_check(states, errors);
            CAPTURE(victim);
            CAPTURE(qubit);
            CAPTURE(letter);
            CHECK_FALSE(broken.pass);
        }
    }
}

TEST_CASE("combined support distance stops at the degenerate pair") {
    Instance inst = load("paper-6-4-3-1");
    eacws::DistanceReport rep = eacws::certify_distance(inst.states, inst.layout, 3);
    CHECK(rep.certified == 2);
    CHECK(rep.exact);
    REQUIRE(rep.witness.has_value());
    CHECK(eacws::pauli_weight(*rep.witness) == 2);
    // The witness is the h generator: Z on the last sender qubit with X on the
    // receiver half, invisible to the code space.
    CHECK(eacws::format_pauli(*rep.witness) == "IIIIIZ|X");
}

TEST_CASE("sender support distance reaches three") {
    for (const char* name : {"paper-7-9-3-2", "paper-6-4-3-1"}) {
        CAPTURE(name);
        Instance inst = load(name);
        std::vector<std::size_t> support;
        for (std::size_t q = 0; q < inst.layout.n; ++q) support.push_back(q);
        eacws::DistanceReport rep =
            eacws::certify_distance(inst.states, inst.layout, 3, &support);
        CHECK(rep.certified == 3);
        CHECK(rep.exact);
        REQUIRE(rep.witness.has_value());
        CHECK(eacws::pauli_weight(*rep.witness) == 3);
        // A weight-3 undetectable operator exists on the sender side alone
        // (a stabilizer generator), so the distance is exactly 3.
        eacws::KLReport witness_check =
            eacws::kl_check(inst.states, {eacws::identity_pauli(inst.layout), *rep.witness});
        CHECK_FALSE(witness_check.pass);
    }
}

TEST_CASE("distance scan respects the target cutoff") {
    Instance inst = load("paper-6-4-3-1");
    std::vector<std::size_t> support;
    for (std::size_t q = 0; q < inst.layout.n; ++q) support.push_back(q);
    eacws::DistanceReport rep = eacws::certify_distance(inst.states, inst.layout, 2, &support);
    // No sender-side undetectable error of weight <= 2 exists, so the scan
    // certifies a lower bound only.
    CHECK(rep.certified == 3);
    CHECK_FALSE(rep.exact);
    CHECK_FALSE(rep.witness.has_value());
}
