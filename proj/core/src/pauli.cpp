#include "eacws/pauli.hpp"

#include <stdexcept>

namespace eacws {

PauliOperator identity_pauli(QubitLayout layout) {
    return PauliOperator{layout, BitVec(layout.total()), BitVec(layout.total()), 0};
}

PauliOperator single_pauli(QubitLayout layout, std::size_t qubit, char letter) {
    if (qubit >= layout.total()) throw std::out_of_range("qubit index out of range");
    PauliOperator p = identity_pauli(layout);
    switch (letter) {
        case 'X': p.x.set(qubit, true); break;
        case 'Z': p.z.set(qubit, true); break;
        case 'Y':
            p.x.set(qubit, true);
            p.z.set(qubit, true);
            break;
        default: throw std::invalid_argument("letter must be X, Y or Z");
    }
    return p;
}

PauliOperator pauli_mul(const PauliOperator& a, const PauliOperator& b) {
    if (!(a.layout == b.layout)) throw std::invalid_argument("layout mismatch");
    PauliOperator r{a.layout, a.x ^ b.x, a.z ^ b.z,
                    static_cast<std::uint8_t>((a.phase + b.phase + (a.z.dot(b.x) ? 2 : 0)) & 3)};
    return r;
}

PauliOperator pauli_adjoint(const PauliOperator& a) {
    // (i^p X^x Z^z)^dagger = i^{-p} Z^z X^x = i^{-p} (-1)^{x.z} X^x Z^z
    PauliOperator r = a;
    std::uint8_t p = static_cast<std::uint8_t>((4 - a.phase) & 3);
    if (a.x.dot(a.z)) p = static_cast<std::uint8_t>((p + 2) & 3);
    r.phase = p;
    return r;
}

bool pauli_commutes(const PauliOperator& a, const PauliOperator& b) {
    if (!(a.layout == b.layout)) throw std::invalid_argument("layout mismatch");
    return !(a.x.dot(b.z) ^ a.z.dot(b.x));
}

std::size_t pauli_weight(const PauliOperator& p) {
    std::size_t w = 0;
    for (std::size_t q = 0; q < p.layout.total(); ++q)
        if (p.x.get(q) || p.z.get(q)) ++w;
    return w;
}

namespace {

std::uint8_t consume_sign(const std::string& s, std::size_t& pos) {
    std::uint8_t phase = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos < s.size() && s[pos] == 'i') {
        phase = 1;
        ++pos;
    }
    if (neg) phase = static_cast<std::uint8_t>((phase + 2) & 3);
    return phase;
}

}  // namespace

PauliOperator parse_pauli(const std::string& s) {
    std::size_t pos = 0;
    std::uint8_t phase = consume_sign(s, pos);
    std::string body = s.substr(pos);
    auto bar = body.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("pauli string is missing the '|' separator");
    if (body.find('|', bar + 1) != std::string::npos)
        throw std::invalid_argument("pauli string has more than one '|' separator");
    std::size_t n = bar;
    std::size_t c = body.size() - bar - 1;
    if (c > n) throw std::invalid_argument("receiver segment longer than sender segment");
    if (n == 0) throw std::invalid_argument("sender segment is empty");
    PauliOperator p = identity_pauli(make_layout(n, c));
    p.phase = phase;
    std::size_t q = 0;
    for (char ch : body) {
        if (ch == '|') continue;
        switch (ch) {
            case 'I': break;
            case 'X': p.x.set(q, true); break;
            case 'Z': p.z.set(q, true); break;
            case 'Y':
                p.x.set(q, true);
                p.z.set(q, true);
                break;
            default: throw std::invalid_argument("pauli letters must be I, X, Y or Z");
        }
        ++q;
    }
    return p;
}

PauliOperator parse_pauli(const std::string& s, QubitLayout expect) {
    PauliOperator p = parse_pauli(s);
    if (!(p.layout == expect)) throw std::invalid_argument("receiver segment length does not match c");
    return p;
}

std::string format_pauli(const PauliOperator& p) {
    std::string out;
    out.reserve(p.layout.total() + 1);
    for (std::size_t q = 0; q < p.layout.total(); ++q) {
        if (q == p.layout.n) out.push_back('|');
        bool xb = p.x.get(q), zb = p.z.get(q);
        out.push_back(xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I'));
    }
    if (p.layout.c == 0) out.push_back('|');
    return out;
}

}  // namespace eacws
