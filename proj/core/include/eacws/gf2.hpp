#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eacws/bitvec.hpp"

namespace eacws {

// Dense GF(2) matrix: a list of equal-length BitVec rows.
struct BitMatrix {
    std::vector<BitVec> rows;
    std::size_t cols = 0;

    BitMatrix() = default;
    BitMatrix(std::size_t r, std::size_t c);
    std::size_t row_count() const { return rows.size(); }
};

// Row-reduces so that each requested pivot column, processed in the given
// order, carries a leading 1 cleared from every other row, where rank permits.
// Pivot rows are moved to the top in pivot order; the row space is preserved.
// Returns the columns that actually received a pivot.
std::vector<std::size_t> gf2_eliminate(BitMatrix& m, const std::vector<std::size_t>& pivot_columns);

std::size_t gf2_rank(BitMatrix m);
// Full reduced row echelon form over all columns, zero rows dropped.
BitMatrix gf2_canonical(BitMatrix m);
bool gf2_row_space_equal(const BitMatrix& a, const BitMatrix& b);
// Solves sum of selected rows of a == target; returns selected row indices.
std::optional<std::vector<std::size_t>> gf2_solve_rows(const BitMatrix& a, const BitVec& target);

}  // namespace eacws
