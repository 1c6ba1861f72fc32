#include "eacws/kl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eacws {

namespace {

std::vector<std::complex<double>> pair_values(const std::vector<StateVector>& states,
                                              const PauliOperator& p) {
    std::size_t k = states.size();
    std::vector<std::complex<double>> vals(k * k);
    for (std::size_t j = 0; j < k; ++j) {
        StateVector tmp = states[j];
        apply_pauli(tmp, p);
        for (std::size_t i = 0; i < k; ++i) vals[i * k + j] = inner(states[i], tmp);
    }
    return vals;
}

}  // namespace

std::vector<StateVector> codeword_states(const std::vector<WordOperatorPair>& table,
                                         const StateVector& encoded_base) {
    std::vector<StateVector> states;
    states.reserve(table.size());
    for (const auto& row : table) {
        if (row.post.layout.total() != encoded_base.num_qubits)
            throw std::invalid_argument("word operator layout mismatch");
        StateVector sv = encoded_base;
        apply_pauli(sv, row.post);
        states.push_back(std::move(sv));
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i; j < states.size(); ++j) {
            double expect = i == j ? 1.0 : 0.0;
            if (std::abs(inner(states[i], states[j]) - expect) > 1e-9) {
                std::ostringstream os;
                os << "codeword states for " << table[i].codeword.str_split(table[i].post.layout.n)
                   << " and " << table[j].codeword.str_split(table[j].post.layout.n)
                   << " are not orthonormal";
                throw std::invalid_argument(os.str());
            }
        }
    }
    return states;
}

KLReport kl_check(const std::vector<StateVector>& states,
                  const std::vector<PauliOperator>& errors,
                  double tol) {
    if (states.empty()) throw std::invalid_argument("recovery check requires codeword states");
    KLReport report;
    report.tolerance = tol;
    std::size_t k = states.size(), m = errors.size();
    report.c_matrix.assign(m, std::vector<std::complex<double>>(m, 0.0));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a; b < m; ++b) {
            PauliOperator p = pauli_mul(pauli_adjoint(errors[a]), errors[b]);
            bool capped = report.violations.size() >= kMaxViolations;
            if (capped) {
                // Reference entry only; the violation list already overflowed.
                StateVector tmp = states[0];
                apply_pauli(tmp, p);
                auto ref = inner(states[0], tmp);
                report.c_matrix[a][b] = ref;
                report.c_matrix[b][a] = std::conj(ref);
                continue;
            }
            auto vals = pair_values(states, p);
            auto ref = vals[0];
            report.c_matrix[a][b] = ref;
            report.c_matrix[b][a] = std::conj(ref);
            for (std::size_t i = 0; i < k && report.violations.size() < kMaxViolations; ++i) {
                for (std::size_t j = 0; j < k && report.violations.size() < kMaxViolations; ++j) {
                    auto v = vals[i * k + j];
                    if (i == j) {
                        if (std::abs(v - ref) > tol)
                            report.violations.push_back(KLViolation{a, b, i, i, v, true});
                    } else if (std::abs(v) > tol) {
                        report.violations.push_back(KLViolation{a, b, i, j, v, false});
                    }
                }
            }
        }
    }
    report.pass = report.violations.empty();
    return report;
}

DistanceReport certify_distance(const std::vector<StateVector>& states,
                                QubitLayout layout,
                                std::size_t d_target,
                                const std::vector<std::size_t>* support,
                                double tol) {
    if (states.empty()) throw std::invalid_argument("distance certification requires codeword states");
    std::vector<std::size_t> positions;
    if (support) {
        positions = *support;
        std::sort(positions.begin(), positions.end());
        positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
        for (std::size_t q : positions) {
            if (q >= layout.total()) throw std::invalid_argument("support position out of range");
        }
    } else {
        positions.resize(layout.total());
        for (std::size_t q = 0; q < positions.size(); ++q) positions[q] = q;
    }

    std::size_t k = states.size();
    // Undetectable iff the matrix elements <w_i|E|w_j> deviate from a single
    // multiple of the identity.
    auto undetectable = [&](const PauliOperator& e) {
        auto vals = pair_values(states, e);
        auto ref = vals[0];
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                auto v = vals[i * k + j];
                if (i == j ? std::abs(v - ref) > tol : std::abs(v) > tol) return true;
            }
        }
        return false;
    };

    for (std::size_t w = 1; w <= std::min(d_target, positions.size()); ++w) {
        std::vector<std::size_t> pick(w);
        for (std::size_t i = 0; i < w; ++i) pick[i] = i;
        while (true) {
            std::vector<unsigned> letters(w, 0);
            while (true) {
                PauliOperator e = identity_pauli(layout);
                for (std::size_t i = 0; i < w; ++i) {
                    static const char kLetters[3] = {'X', 'Y', 'Z'};
                    auto s = single_pauli(layout, positions[pick[i]], kLetters[letters[i]]);
                    e.x ^= s.x;
                    e.z ^= s.z;
                }
                if (undetectable(e)) return DistanceReport{w, true, e};
                std::size_t i = w;
                while (i > 0 && letters[i - 1] == 2) letters[--i] = 0;
                if (i == 0) break;
                ++letters[i - 1];
            }
            std::size_t i = w;
            while (i > 0 && pick[i - 1] == positions.size() - (w - (i - 1))) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < w; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return DistanceReport{d_target + 1, false, std::nullopt};
}

}  // namespace eacws
