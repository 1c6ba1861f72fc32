#include "eacws/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace eacws {

double StateVector::norm() const {
    double s = 0;
    for (const auto& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

StateVector base_state(QubitLayout layout) {
    std::size_t total = layout.total();
    if (total > kMaxDenseQubits)
        throw std::invalid_argument("dense state vectors support at most 14 qubits");
    StateVector sv;
    sv.num_qubits = total;
    sv.amp.assign(std::size_t{1} << total, 0.0);
    double a = std::pow(2.0, -0.5 * static_cast<double>(layout.c));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << layout.c); ++m) {
        std::uint64_t index = 0;
        for (std::size_t j = 0; j < layout.c; ++j) {
            if (m >> j & 1u) {
                index |= std::uint64_t{1} << (layout.ancilla_count() + j);
                index |= std::uint64_t{1} << (layout.n + j);
            }
        }
        sv.amp[index] = a;
    }
    return sv;
}

void apply_pauli(StateVector& sv, const PauliOperator& p) {
    if (p.layout.total() != sv.num_qubits) throw std::invalid_argument("pauli layout mismatch");
    static const std::complex<double> kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::uint64_t xm = p.x.low_bits(), zm = p.z.low_bits();
    std::complex<double> f = kPhase[p.phase & 3];
    std::vector<std::complex<double>> out(sv.amp.size());
    for (std::uint64_t e = 0; e < sv.amp.size(); ++e) {
        std::complex<double> v = f * sv.amp[e];
        if (std::popcount(zm & e) & 1) v = -v;
        out[e ^ xm] = v;
    }
    sv.amp = std::move(out);
}

void apply_hadamard(StateVector& sv, std::size_t q) {
    const double r = 1.0 / std::sqrt(2.0);
    std::uint64_t bit = std::uint64_t{1} << q;
    for (std::uint64_t e = 0; e < sv.amp.size(); ++e) {
        if (e & bit) continue;
        auto a0 = sv.amp[e], a1 = sv.amp[e | bit];
        sv.amp[e] = r * (a0 + a1);
        sv.amp[e | bit] = r * (a0 - a1);
    }
}

void apply_cz(StateVector& sv, std::size_t a, std::size_t b) {
    std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    for (std::uint64_t e = 0; e < sv.amp.size(); ++e) {
        if ((e & mask) == mask) sv.amp[e] = -sv.amp[e];
    }
}

void apply_encoding(StateVector& sv, const EncodingMap& map, ConjugateDirection dir) {
    if (map.layout.total() != sv.num_qubits) throw std::invalid_argument("encoding layout mismatch");
    if (dir == ConjugateDirection::forward) {
        for (std::size_t q = 0; q < map.layout.n; ++q) apply_hadamard(sv, q);
        for (auto [a, b] : map.graph.edges) apply_cz(sv, a, b);
    } else {
        for (auto [a, b] : map.graph.edges) apply_cz(sv, a, b);
        for (std::size_t q = 0; q < map.layout.n; ++q) apply_hadamard(sv, q);
    }
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
    if (a.amp.size() != b.amp.size()) throw std::invalid_argument("state dimension mismatch");
    std::complex<double> s = 0;
    for (std::size_t e = 0; e < a.amp.size(); ++e) s += std::conj(a.amp[e]) * b.amp[e];
    return s;
}

}  // namespace eacws
