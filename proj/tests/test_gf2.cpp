#include <doctest.h>

#include <random>
#include <vector>

#include <eacws/bitvec.hpp>
#include <eacws/gf2.hpp>

using eacws::BitMatrix;
using eacws::BitVec;

namespace {

// Independent oracle: textbook reduced row echelon form on int vectors,
// leftmost pivots, zero rows dropped.
std::vector<std::vector<int>> oracle_rref(std::vector<std::vector<int>> m) {
    if (m.empty()) return m;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            for (std::size_t c2 = 0; c2 < cols; ++c2) m[r][c2] ^= m[row][c2];
        }
        ++row;
    }
    m.resize(row);
    return m;
}

BitMatrix to_bitmatrix(const std::vector<std::vector<int>>& m, std::size_t cols) {
    BitMatrix out;
    out.cols = cols;
    for (const auto& r : m) {
        BitVec v(cols);
        for (std::size_t i = 0; i < cols; ++i) v.set(i, r[i] != 0);
        out.rows.push_back(v);
    }
    return out;
}

std::vector<std::vector<int>> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::vector<std::vector<int>> m(r, std::vector<int>(c, 0));
    for (auto& row : m)
        for (auto& x : row) x = static_cast<int>(rng() & 1);
    return m;
}

}  // namespace

TEST_CASE("canonical form matches the textbook oracle") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t r = 1 + rng() % 12;
        std::size_t c = 1 + rng() % 24;
        auto m = random_matrix(rng, r, c);
        BitMatrix got = eacws::gf2_canonical(to_bitmatrix(m, c));
        BitMatrix want = to_bitmatrix(oracle_rref(m), c);
        REQUIRE(got.row_count() == want.row_count());
        for (std::size_t i = 0; i < got.row_count(); ++i) CHECK(got.rows[i] == want.rows[i]);
    }
}

TEST_CASE("eliminate preserves the row space and pivots where asked") {
    std::mt19937 rng(778);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t r = 1 + rng() % 10;
        std::size_t c = 2 + rng() % 20;
        auto raw = random_matrix(rng, r, c);
        BitMatrix before = to_bitmatrix(raw, c);

        std::vector<std::size_t> pivot_cols;
        std::size_t want = 1 + rng() % c;
        std::vector<std::size_t> all(c);
        for (std::size_t i = 0; i < c; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        pivot_cols.assign(all.begin(), all.begin() + want);

        BitMatrix m = before;
        std::vector<std::size_t> used = eacws::gf2_eliminate(m, pivot_cols);

        CHECK(eacws::gf2_row_space_equal(before, m));
        REQUIRE(used.size() <= pivot_cols.size());
        // Each pivot column has exactly one 1, in the row matching its rank
        // position; requested order is respected.
        for (std::size_t k = 0; k < used.size(); ++k) {
            std::size_t col = used[k];
            std::size_t ones = 0;
            for (std::size_t i = 0; i < m.row_count(); ++i)
                if (m.rows[i].get(col)) ++ones;
            CHECK(ones == 1);
            CHECK(m.rows[k].get(col));
        }
    }
}

TEST_CASE("rank agrees with the oracle") {
    std::mt19937 rng(779);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t r = 1 + rng() % 12;
        std::size_t c = 1 + rng() % 20;
        auto m = random_matrix(rng, r, c);
        CHECK(eacws::gf2_rank(to_bitmatrix(m, c)) == oracle_rref(m).size());
    }
}

TEST_CASE("solve_rows reproduces targets built from row subsets") {
    std::mt19937 rng(780);
    int solvable_seen = 0;
    int unsolvable_seen = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t r = 1 + rng() % 8;
        std::size_t c = 2 + rng() % 16;
        BitMatrix a = to_bitmatrix(random_matrix(rng, r, c), c);

        BitVec target(c);
        for (std::size_t i = 0; i < r; ++i)
            if (rng() & 1) target ^= a.rows[i];
        if (rng() % 4 == 0) {
            // Random target, possibly outside the row space.
            for (std::size_t i = 0; i < c; ++i) target.set(i, rng() & 1);
        }

        auto picked = eacws::gf2_solve_rows(a, target);
        BitMatrix with_target = a;
        with_target.rows.push_back(target);
        bool in_space = eacws::gf2_rank(a) == eacws::gf2_rank(with_target);
        REQUIRE(picked.has_value() == in_space);
        if (picked) {
            ++solvable_seen;
            BitVec sum(c);
            for (std::size_t idx : *picked) {
                REQUIRE(idx < r);
                sum ^= a.rows[idx];
            }
            CHECK(sum == target);
        } else {
            ++unsolvable_seen;
        }
    }
    CHECK(solvable_seen > 100);
    CHECK(unsolvable_seen > 20);
}

TEST_CASE("row_space_equal flags genuine differences") {
    BitMatrix a = to_bitmatrix({{1, 0, 1}, {0, 1, 1}}, 3);
    BitMatrix b = to_bitmatrix({{1, 1, 0}, {0, 1, 1}}, 3);
    CHECK(eacws::gf2_row_space_equal(a, b));
    BitMatrix c = to_bitmatrix({{1, 0, 1}}, 3);
    CHECK_FALSE(eacws::gf2_row_space_equal(a, c));
    BitMatrix d = to_bitmatrix({{1, 0, 0}, {0, 1, 1}}, 3);
    CHECK_FALSE(eacws::gf2_row_space_equal(a, d));
}
