#include <doctest.h>

#include <stdexcept>

#include <eacws/checkmatrix.hpp>
#include <eacws/ea_reduction.hpp>
#include <eacws/fixtures.hpp>
#include <eacws/gf2.hpp>

using eacws::BitVec;
using eacws::CheckMatrix;
using eacws::EAReduction;

TEST_CASE("check matrix text round trip") {
    std::string text =
        "# comment line\n"
        "10010|01100\n"
        "\n"
        "01001|00110\n";
    CheckMatrix cm = eacws::parse_check_matrix(text);
    CHECK(cm.n == 5);
    CHECK(cm.rows() == 2);
    CHECK(cm.k() == 3);
    CHECK(cm.hx.rows[0].str() == "10010");
    CHECK(cm.hz.rows[0].str() == "01100");
    CHECK(eacws::format_check_matrix(cm) == "10010|01100\n01001|00110\n");
    CHECK(eacws::format_pauli(cm.row_pauli(0)) == "XZZXI|");
    CHECK(cm.flat_row(1).str() == "0100100110");

    CHECK_THROWS_AS(eacws::parse_check_matrix("101|01"), std::invalid_argument);
    CHECK_THROWS_AS(eacws::parse_check_matrix("10a|010\n"), std::invalid_argument);
    CHECK_THROWS_AS(eacws::parse_check_matrix("10|01\n100|010\n"), std::invalid_argument);
}

TEST_CASE("validation enforces commutation and rank") {
    // Rows 2 and 3 anticommute symplectically.
    CHECK_THROWS_AS(eacws::validate_check_matrix(
                        eacws::parse_check_matrix("10|00\n01|10\n")),
                    std::invalid_argument);
    // Duplicate rows are rank deficient.
    CHECK_THROWS_AS(eacws::validate_check_matrix(
                        eacws::parse_check_matrix("10|00\n10|00\n")),
                    std::invalid_argument);
    CHECK_NOTHROW(eacws::validate_check_matrix(
        eacws::parse_check_matrix("10|00\n01|00\n")));
}

TEST_CASE("five qubit matrix reduces to one ebit") {
    CheckMatrix cm = eacws::load_fixture_check_matrix("bowen-5-1-3");
    REQUIRE(cm.n == 5);
    REQUIRE(cm.rows() == 4);
    eacws::validate_check_matrix(cm);

    EAReduction red = eacws::reduce_check_matrix(cm, {3, 4});
    CHECK(red.c == 2);
    CHECK(red.ebit_columns == std::vector<std::size_t>{3, 4});
    eacws::verify_reduction(red, cm);

    std::vector<std::string> rows;
    for (std::size_t r = 0; r < red.reduced.rows(); ++r)
        rows.push_back(red.reduced.hx.rows[r].str() + "|" + red.reduced.hz.rows[r].str());
    std::vector<std::string> want = {
        "10010|01100",
        "00101|11000",
        "01100|11110",
        "11000|11101",
    };
    CHECK(rows == want);

    REQUIRE(red.h_rows.size() == 2);
    REQUIRE(red.g_rows.size() == 2);
    CHECK(eacws::format_pauli(red.h_rows[0]) == "XZZ|XI");
    CHECK(eacws::format_pauli(red.h_rows[1]) == "ZZX|IX");
    CHECK(eacws::format_pauli(red.g_rows[0]) == "ZYY|ZI");
    CHECK(eacws::format_pauli(red.g_rows[1]) == "YYZ|IZ");
    CHECK(red.remainder.empty());
}

TEST_CASE("reduction preserves the row space") {
    CheckMatrix cm = eacws::load_fixture_check_matrix("bowen-5-1-3");
    EAReduction red = eacws::reduce_check_matrix(cm, {3, 4});
    CHECK(eacws::gf2_row_space_equal(cm.flat(), red.reduced.flat()));
}

TEST_CASE("css matrix hosts one ebit on a single column") {
    CheckMatrix cm = eacws::load_fixture_check_matrix("steane-7-1-3");
    REQUIRE(cm.n == 7);
    REQUIRE(cm.rows() == 6);
    eacws::validate_check_matrix(cm);

    EAReduction red = eacws::reduce_check_matrix(cm, {6});
    CHECK(red.c == 1);
    eacws::verify_reduction(red, cm);
    REQUIRE(red.h_rows.size() == 1);
    REQUIRE(red.g_rows.size() == 1);
    CHECK(red.remainder.size() == 4);
    // Remainder rows never touch the receiver side.
    for (const auto& p : red.remainder) {
        CHECK_FALSE(p.x.get(6));
        CHECK_FALSE(p.z.get(6));
    }
    CHECK(eacws::gf2_row_space_equal(cm.flat(), red.reduced.flat()));
}

TEST_CASE("reducing an already reduced matrix is stable") {
    CheckMatrix cm = eacws::load_fixture_check_matrix("bowen-5-1-3");
    EAReduction once = eacws::reduce_check_matrix(cm, {3, 4});
    EAReduction twice = eacws::reduce_check_matrix(once.reduced, {3, 4});
    for (std::size_t r = 0; r < once.reduced.rows(); ++r)
        CHECK(once.reduced.flat_row(r) == twice.reduced.flat_row(r));
}

TEST_CASE("impossible column choices report the shortfall") {
    // No row carries Z anywhere, so no column can host a Z pivot.
    CheckMatrix no_z = eacws::parse_check_matrix("10|00\n01|00\n");
    CHECK_THROWS_AS(eacws::reduce_check_matrix(no_z, {0}), std::invalid_argument);
    try {
        eacws::reduce_check_matrix(no_z, {0});
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("support both an X and a Z pivot") != std::string::npos);
    }

    CheckMatrix cm = eacws::load_fixture_check_matrix("steane-7-1-3");
    CHECK_THROWS_AS(eacws::reduce_check_matrix(cm, {7}), std::invalid_argument);
    // More ebits than the row count can carry.
    CHECK_THROWS_AS(eacws::reduce_check_matrix(no_z, {0, 1}), std::invalid_argument);
}
