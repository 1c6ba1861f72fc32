#include "eacws/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace eacws {

BitMatrix::BitMatrix(std::size_t r, std::size_t c) : rows(r, BitVec(c)), cols(c) {}

std::vector<std::size_t> gf2_eliminate(BitMatrix& m, const std::vector<std::size_t>& pivot_columns) {
    std::vector<std::size_t> pivoted;
    std::size_t next = 0;
    for (std::size_t col : pivot_columns) {
        if (col >= m.cols) throw std::invalid_argument("pivot column out of range");
        std::size_t r = next;
        while (r < m.row_count() && !m.rows[r].get(col)) ++r;
        if (r == m.row_count()) continue;  // rank does not permit a pivot here
        std::swap(m.rows[next], m.rows[r]);
        for (std::size_t i = 0; i < m.row_count(); ++i) {
            if (i != next && m.rows[i].get(col)) m.rows[i] ^= m.rows[next];
        }
        pivoted.push_back(col);
        ++next;
    }
    return pivoted;
}

std::size_t gf2_rank(BitMatrix m) {
    std::vector<std::size_t> all(m.cols);
    for (std::size_t i = 0; i < m.cols; ++i) all[i] = i;
    return gf2_eliminate(m, all).size();
}

BitMatrix gf2_canonical(BitMatrix m) {
    std::vector<std::size_t> all(m.cols);
    for (std::size_t i = 0; i < m.cols; ++i) all[i] = i;
    std::size_t r = gf2_eliminate(m, all).size();
    m.rows.resize(r, BitVec(m.cols));
    return m;
}

bool gf2_row_space_equal(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols != b.cols) return false;
    BitMatrix ca = gf2_canonical(a);
    BitMatrix cb = gf2_canonical(b);
    return ca.rows == cb.rows;
}

std::optional<std::vector<std::size_t>> gf2_solve_rows(const BitMatrix& a, const BitVec& target) {
    if (target.size() != a.cols) throw std::invalid_argument("target length mismatch");
    // Augment each row with a selector tail identifying the original rows.
    std::size_t r = a.row_count();
    BitMatrix aug(r, a.cols + r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t jcol = 0; jcol < a.cols; ++jcol) aug.rows[i].set(jcol, a.rows[i].get(jcol));
        aug.rows[i].set(a.cols + i, true);
    }
    std::vector<std::size_t> front(a.cols);
    for (std::size_t i = 0; i < a.cols; ++i) front[i] = i;
    std::vector<std::size_t> pivots = gf2_eliminate(aug, front);

    BitVec residue(a.cols + r);
    for (std::size_t i = 0; i < a.cols; ++i) residue.set(i, target.get(i));
    for (std::size_t p = 0; p < pivots.size(); ++p) {
        if (residue.get(pivots[p])) residue ^= aug.rows[p];
    }
    for (std::size_t i = 0; i < a.cols; ++i)
        if (residue.get(i)) return std::nullopt;

    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < r; ++i)
        if (residue.get(a.cols + i)) picked.push_back(i);
    return picked;
}

}  // namespace eacws
