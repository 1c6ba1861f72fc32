#pragma once

#include <string>
#include <vector>

#include "eacws/gf2.hpp"
#include "eacws/pauli.hpp"

namespace eacws {

// [Hx | Hz] stabilizer check matrix: row r encodes a generator with X support
// hx.rows[r] and Z support hz.rows[r].
struct CheckMatrix {
    std::size_t n = 0;
    BitMatrix hx, hz;

    std::size_t rows() const { return hx.row_count(); }
    std::size_t k() const { return n - rows(); }
    // Row r as a Pauli on the layout (n, 0).
    PauliOperator row_pauli(std::size_t r) const;
    // Both halves of row r as one 2n-column vector [x|z].
    BitVec flat_row(std::size_t r) const;
    BitMatrix flat() const;
};

// Text grammar: one row per line, '0'/'1' with a single '|' separating the
// X half from the Z half; blank lines and '#' comments are skipped.
CheckMatrix parse_check_matrix(const std::string& text);
std::string format_check_matrix(const CheckMatrix& cm);
CheckMatrix check_matrix_from_rows(std::size_t n, const std::vector<BitVec>& flat_rows);

// Pairwise symplectic orthogonality and full row rank.
void validate_check_matrix(const CheckMatrix& cm);

}  // namespace eacws
