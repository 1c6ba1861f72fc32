#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include <eacws/layout.hpp>
#include <eacws/pauli.hpp>

using eacws::PauliOperator;
using eacws::QubitLayout;

namespace {

using Cx = std::complex<double>;
using Matrix = std::vector<Cx>;  // row-major, dim x dim

// Dense oracle: Kronecker-product matrix for a Pauli operator, built from
// nothing but the 2x2 letter matrices and the phase power, so it shares no
// code with the symplectic implementation.
Matrix letter_matrix(char letter) {
    switch (letter) {
        case 'I': return {1, 0, 0, 1};
        case 'X': return {0, 1, 1, 0};
        case 'Y': return {0, Cx(0, -1), Cx(0, 1), 0};
        default: return {1, 0, 0, -1};  // Z
    }
}

Matrix kron(const Matrix& a, std::size_t da, const Matrix& b, std::size_t db) {
    std::size_t d = da * db;
    Matrix out(d * d, 0.0);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out[(i * db + k) * d + (j * db + l)] = a[i * da + j] * b[k * db + l];
    return out;
}

char letter_of(const PauliOperator& p, std::size_t q) {
    bool x = p.x.get(q);
    bool z = p.z.get(q);
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

Matrix dense_matrix(const PauliOperator& p) {
    std::size_t total = p.layout.total();
    Matrix m = {1};
    std::size_t dim = 1;
    // The operator is i^phase * X^x Z^z; on a qubit with x=z=1 that factor is
    // XZ = i^3 * Y, so each Y letter owes an extra i^3 relative to the letter
    // matrix product.
    int extra = 0;
    for (std::size_t q = 0; q < total; ++q) {
        char letter = letter_of(p, q);
        m = kron(m, dim, letter_matrix(letter), 2);
        dim *= 2;
        if (letter == 'Y') extra = (extra + 3) % 4;
    }
    static const Cx kPhase[4] = {1, Cx(0, 1), -1, Cx(0, -1)};
    Cx scale = kPhase[(p.phase + extra) % 4];
    for (auto& v : m) v *= scale;
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b, std::size_t d) {
    Matrix out(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            Cx aik = a[i * d + k];
            if (aik == Cx(0.0)) continue;
            for (std::size_t j = 0; j < d; ++j) out[i * d + j] += aik * b[k * d + j];
        }
    return out;
}

bool matrix_close(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > 1e-12) return false;
    return true;
}

PauliOperator random_pauli(std::mt19937& rng, QubitLayout layout) {
    PauliOperator p = eacws::identity_pauli(layout);
    for (std::size_t q = 0; q < layout.total(); ++q) {
        p.x.set(q, rng() & 1);
        p.z.set(q, rng() & 1);
    }
    p.phase = static_cast<std::uint8_t>(rng() % 4);
    return p;
}

}  // namespace

TEST_CASE("product matches the dense Kronecker oracle") {
    std::mt19937 rng(4242);
    QubitLayout layout = eacws::make_layout(2, 1);  // 3 qubits, dim 8
    for (int trial = 0; trial < 300; ++trial) {
        PauliOperator a = random_pauli(rng, layout);
        PauliOperator b = random_pauli(rng, layout);
        PauliOperator ab = eacws::pauli_mul(a, b);
        Matrix want = matmul(dense_matrix(a), dense_matrix(b), 8);
        CHECK(matrix_close(dense_matrix(ab), want));
    }
}

TEST_CASE("adjoint matches the conjugate transpose") {
    std::mt19937 rng(4243);
    QubitLayout layout = eacws::make_layout(2, 1);
    for (int trial = 0; trial < 200; ++trial) {
        PauliOperator a = random_pauli(rng, layout);
        Matrix m = dense_matrix(a);
        Matrix dagger(m.size());
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) dagger[i * 8 + j] = std::conj(m[j * 8 + i]);
        CHECK(matrix_close(dense_matrix(eacws::pauli_adjoint(a)), dagger));
        // a * a^dagger is the identity: Paulis are unitary.
        PauliOperator unit = eacws::pauli_mul(a, eacws::pauli_adjoint(a));
        CHECK(unit.is_identity());
        CHECK(unit.phase == 0);
    }
}

TEST_CASE("commutation agrees with the dense matrices") {
    std::mt19937 rng(4244);
    QubitLayout layout = eacws::make_layout(2, 1);
    int commuting = 0;
    for (int trial = 0; trial < 300; ++trial) {
        PauliOperator a = random_pauli(rng, layout);
        PauliOperator b = random_pauli(rng, layout);
        Matrix ab = matmul(dense_matrix(a), dense_matrix(b), 8);
        Matrix ba = matmul(dense_matrix(b), dense_matrix(a), 8);
        bool dense_commutes = matrix_close(ab, ba);
        CHECK(eacws::pauli_commutes(a, b) == dense_commutes);
        if (dense_commutes) ++commuting;
    }
    CHECK(commuting > 50);  // both outcomes exercised
}

TEST_CASE("product is associative with exact phases") {
    std::mt19937 rng(4245);
    QubitLayout layout = eacws::make_layout(7, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        PauliOperator a = random_pauli(rng, layout);
        PauliOperator b = random_pauli(rng, layout);
        PauliOperator c = random_pauli(rng, layout);
        PauliOperator left = eacws::pauli_mul(eacws::pauli_mul(a, b), c);
        PauliOperator right = eacws::pauli_mul(a, eacws::pauli_mul(b, c));
        CHECK(left == right);
    }
}

TEST_CASE("single letters have the expected matrices") {
    QubitLayout layout = eacws::make_layout(1, 1);
    for (char letter : {'X', 'Y', 'Z'}) {
        PauliOperator p = eacws::single_pauli(layout, 1, letter);
        Matrix want = kron(letter_matrix('I'), 2, letter_matrix(letter), 2);
        CHECK(matrix_close(dense_matrix(p), want));
        CHECK(eacws::pauli_weight(p) == 1);
    }
    CHECK(eacws::pauli_weight(eacws::identity_pauli(layout)) == 0);
}

TEST_CASE("parse and format round trip") {
    QubitLayout layout = eacws::make_layout(7, 2);
    PauliOperator p = eacws::parse_pauli("XIZYIIZ|IX", layout);
    CHECK(eacws::format_pauli(p) == "XIZYIIZ|IX");
    CHECK(p.x.get(0));
    CHECK(p.z.get(2));
    CHECK(p.x.get(3));
    CHECK(p.z.get(3));
    CHECK(p.x.get(8));

    // Signs parse but are not emitted.
    PauliOperator minus = eacws::parse_pauli("-XIZYIIZ|IX", layout);
    CHECK(minus.same_letters(p));
    CHECK(minus.phase == (p.phase + 2) % 4);
    CHECK(eacws::format_pauli(minus) == "XIZYIIZ|IX");
    PauliOperator imag = eacws::parse_pauli("+iXIZYIIZ|IX", layout);
    CHECK(imag.phase == (p.phase + 1) % 4);

    CHECK_THROWS_AS(eacws::parse_pauli("XX", layout), std::invalid_argument);
    CHECK_THROWS_AS(eacws::parse_pauli("XIZYIIZ|IQ", layout), std::invalid_argument);
    CHECK_THROWS_AS(eacws::parse_pauli("XIZYIIZIX", layout), std::invalid_argument);
}

TEST_CASE("random parse format round trips") {
    std::mt19937 rng(4246);
    QubitLayout layout = eacws::make_layout(5, 2);
    for (int trial = 0; trial < 200; ++trial) {
        PauliOperator p = random_pauli(rng, layout);
        p.phase = 0;
        std::string s = eacws::format_pauli(p);
        PauliOperator back = eacws::parse_pauli(s, layout);
        CHECK(back.same_letters(p));
        CHECK(eacws::format_pauli(back) == s);
    }
}
