#include "eacws/pipeline.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eacws {

namespace {

std::string fmt_complex(const std::complex<double>& v) {
    std::ostringstream os;
    os << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    return os.str();
}

std::string describe_violation(const KLViolation& v, const std::vector<PauliOperator>& errors) {
    std::ostringstream os;
    os << "E_a=" << format_pauli(errors[v.error_a]) << " E_b=" << format_pauli(errors[v.error_b]);
    if (v.diagonal)
        os << " diagonal entry at codeword " << v.row;
    else
        os << " off-diagonal entry at codewords (" << v.row << "," << v.col << ")";
    os << " value " << fmt_complex(v.value);
    return os.str();
}

bool receiver_x_free(const PauliOperator& p) {
    for (std::size_t j = 0; j < p.layout.c; ++j)
        if (p.x.get(p.layout.n + j)) return false;
    return true;
}

}  // namespace

ConstructedCode construct_code(std::size_t n, std::size_t c, const GraphSpec& graph, std::size_t d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("distance must be odd and at least 3");
    ConstructedCode cc;
    cc.layout = make_layout(n, c);
    cc.graph = graph;
    cc.d = d;
    cc.generators = encoded_generators(cc.layout, graph);
    validate_generators(cc.generators, true);
    cc.map = build_encoding_map(cc.layout, graph);
    cc.error_set.push_back(identity_pauli(cc.layout));
    for (auto& e : enumerate_errors_up_to_weight(cc.layout, (d - 1) / 2))
        cc.error_set.push_back(std::move(e));
    cc.catalog = build_error_catalog(cc.generators, cc.error_set);
    cc.conflicts = build_conflict_set(cc.catalog);
    return cc;
}

VerificationInfo verify_constructed(const ConstructedCode& cc, const ClassicalCode& code, double tol) {
    VerificationInfo v;
    v.checked = true;
    v.classical_conflict_free = !verify_code(code, cc.conflicts).has_value();

    StateVector encoded = base_state(cc.layout);
    apply_encoding(encoded, cc.map, ConjugateDirection::forward);
    auto table = word_operator_table(code, cc.generators, cc.map);
    std::vector<StateVector> states;
    try {
        states = codeword_states(table, encoded);
    } catch (const std::invalid_argument&) {
        v.gram_identity = false;
        return v;
    }
    v.gram_identity = true;

    auto full = kl_check(states, cc.error_set, tol);
    v.kl_single_errors_pass = full.pass;
    if (!full.pass) v.kl_first_violation = describe_violation(full.violations.front(), cc.error_set);

    auto dist = certify_distance(states, cc.layout, cc.d, nullptr, tol);
    v.certified_distance = dist.certified;
    v.distance_exact = dist.exact;
    if (dist.witness) v.distance_witness = format_pauli(*dist.witness);

    std::vector<PauliOperator> sender_errors;
    for (const auto& e : cc.error_set)
        if (receiver_x_free(e)) sender_errors.push_back(e);
    v.kl_sender_model_pass = kl_check(states, sender_errors, tol).pass;

    std::vector<std::size_t> sender_support(cc.layout.n);
    for (std::size_t q = 0; q < cc.layout.n; ++q) sender_support[q] = q;
    auto sdist = certify_distance(states, cc.layout, cc.d, &sender_support, tol);
    v.certified_distance_sender = sdist.certified;
    v.distance_sender_exact = sdist.exact;
    if (sdist.witness) v.distance_sender_witness = format_pauli(*sdist.witness);
    return v;
}

CodeRecord make_record(const ConstructedCode& cc, const SearchResult& sr,
                       const std::string& name, const std::string& provenance,
                       bool run_verification) {
    CodeRecord rec;
    rec.name = name;
    rec.n = cc.layout.n;
    rec.c = cc.layout.c;
    rec.K = sr.code.K();
    rec.d = cc.d;
    rec.graph = cc.graph;
    for (const auto& g : cc.generators.g) rec.generators_g.push_back(format_pauli(g));
    for (const auto& h : cc.generators.h) rec.generators_h.push_back(format_pauli(h));
    for (const auto& w : sr.code.codewords) rec.codewords.push_back(w.str_split(cc.layout.n));
    for (const auto& row : word_operator_table(sr.code, cc.generators, cc.map)) {
        rec.word_operators.push_back(WordOpRecord{row.codeword.str_split(cc.layout.n),
                                                  format_pauli(row.pre), format_pauli(row.post)});
    }
    rec.search.exact = sr.exact;
    rec.search.nodes = sr.nodes;
    rec.search.budget_exhausted = !sr.exact;
    if (run_verification) rec.verification = verify_constructed(cc, sr.code);
    rec.provenance = provenance;
    return rec;
}

VerificationInfo verify_record(const CodeRecord& rec, double tol) {
    ConstructedCode cc = construct_code(rec.n, rec.c, rec.graph, rec.d);
    std::size_t total = cc.layout.total();

    if (rec.generators_g.size() != cc.generators.g.size() ||
        rec.generators_h.size() != cc.generators.h.size())
        throw std::runtime_error("stored generator counts disagree with the construction");
    for (std::size_t i = 0; i < rec.generators_g.size(); ++i) {
        if (rec.generators_g[i] != format_pauli(cc.generators.g[i])) {
            std::ostringstream os;
            os << "stored generator g[" << i << "] disagrees with the construction";
            throw std::runtime_error(os.str());
        }
    }
    for (std::size_t j = 0; j < rec.generators_h.size(); ++j) {
        if (rec.generators_h[j] != format_pauli(cc.generators.h[j])) {
            std::ostringstream os;
            os << "stored generator h[" << j << "] disagrees with the construction";
            throw std::runtime_error(os.str());
        }
    }

    if (rec.K != rec.codewords.size())
        throw std::runtime_error("stored K disagrees with the codeword count");
    ClassicalCode code;
    code.length = total;
    for (const auto& s : rec.codewords) code.codewords.push_back(parse_bits(s, total, cc.layout.n));
    std::sort(code.codewords.begin(), code.codewords.end());
    if (std::adjacent_find(code.codewords.begin(), code.codewords.end()) != code.codewords.end())
        throw std::runtime_error("stored codewords contain a duplicate");

    if (!rec.word_operators.empty()) {
        auto table = word_operator_table(code, cc.generators, cc.map);
        if (table.size() != rec.word_operators.size())
            throw std::runtime_error("stored word operator count disagrees with the codewords");
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto& stored = rec.word_operators[i];
            if (stored.codeword != table[i].codeword.str_split(cc.layout.n) ||
                stored.pre != format_pauli(table[i].pre) ||
                stored.post != format_pauli(table[i].post)) {
                std::ostringstream os;
                os << "stored word operator " << i << " disagrees with the synthesis";
                throw std::runtime_error(os.str());
            }
        }
    }
    return verify_constructed(cc, code, tol);
}

}  // namespace eacws
