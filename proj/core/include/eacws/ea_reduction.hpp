#pragma once

#include <vector>

#include "eacws/checkmatrix.hpp"

namespace eacws {

// Block form that isolates the chosen ebit columns: the X-pivot rows carry a
// lone X on their ebit column (h'_j with trailing X_j), the Z-pivot rows a
// lone Z (g'_j with trailing Z_j), and the remainder rows have no support on
// any ebit column. Produced by row operations only, so the stabilizer group
// is unchanged.
struct EAReduction {
    CheckMatrix reduced;                     // rows ordered [X pivots, Z pivots, remainder]
    std::vector<std::size_t> ebit_columns;   // 0-based, ascending
    std::size_t c = 0;
    // Simplified generators on layout (n-c, c): Alice part from the non-ebit
    // columns in original order, Bob part from the ebit columns.
    std::vector<PauliOperator> h_rows;       // trailing X_j
    std::vector<PauliOperator> g_rows;       // trailing Z_j
    std::vector<PauliOperator> remainder;
};

// Throws when the requested columns cannot host both identity blocks; the
// message reports the achievable ebit count for that column choice.
EAReduction reduce_check_matrix(const CheckMatrix& cm, std::vector<std::size_t> ebit_columns);

// Row-space equality with the original, the c anticommuting (g'_j, h'_j)
// pairs on the truncated generators, and commutation of every other pair.
// Throws std::runtime_error describing the first failure.
void verify_reduction(const EAReduction& red, const CheckMatrix& original);

}  // namespace eacws
