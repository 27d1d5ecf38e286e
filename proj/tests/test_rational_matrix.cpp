#include "bfc/matrix.hpp"
#include "bfc/rational.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace bfc;

TEST_CASE("rationals print in lowest terms") {
    CHECK(to_string(Q(0)) == "0");
    CHECK(to_string(Q(-3)) == "-3");
    CHECK(to_string(frac(6, -4)) == "-3/2");
    CHECK(to_string(frac(-2, -6)) == "1/3");
    CHECK_THROWS_AS(frac(1, 0), std::domain_error);
}

TEST_CASE("rationals parse") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-1/2") == frac(-1, 2));
    CHECK(parse_rational("4/6") == frac(2, 3));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("inverse factorials vanish at negative arguments") {
    CHECK(inv_factorial(-1) == 0);
    CHECK(inv_factorial(0) == 1);
    CHECK(inv_factorial(5) == frac(1, 120));
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("small determinants and ranks") {
    const Matrix a{{1, 2}, {3, 4}};
    CHECK(determinant(a) == -2);
    CHECK(rank(a) == 2);
    const Matrix singular{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(determinant(singular) == 0);
    CHECK(rank(singular) == 2);
    const Matrix halves{{frac(1, 2), frac(1, 3)}, {frac(1, 4), frac(1, 5)}};
    CHECK(determinant(halves) == frac(1, 10) - frac(1, 12));
    CHECK(rank(Matrix(3, 4)) == 0);
    CHECK(determinant(Matrix(0, 0)) == 1);
}

TEST_CASE("matrix arithmetic") {
    const Matrix a{{1, 2}, {3, 4}};
    CHECK(a * Matrix::identity(2) == a);
    CHECK(a - a == Matrix(2, 2));
    CHECK((a + a) == a.scaled(2));
    CHECK(a.transposed() == Matrix{{1, 3}, {2, 4}});
    CHECK((a - a).is_zero());
}

TEST_CASE("solve_unique") {
    const Matrix a{{2, 1}, {1, 3}};
    const auto x = solve_unique(a, {Q(3), Q(5)});
    REQUIRE(x.size() == 2);
    CHECK(x[0] == frac(4, 5));
    CHECK(x[1] == frac(7, 5));

    const Matrix tall{{1, 0}, {0, 1}, {1, 1}};
    const auto y = solve_unique(tall, {Q(1), Q(2), Q(3)});
    CHECK(y == std::vector<Q>{Q(1), Q(2)});
    CHECK_THROWS_AS(solve_unique(tall, {Q(1), Q(2), Q(4)}), std::domain_error);
    CHECK_THROWS_AS(solve_unique(Matrix{{1, 1}}, {Q(1)}), std::domain_error);
}

TEST_CASE("block_rank agrees with rank on block-diagonal matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m(7, 6);
        // Two blocks on disjoint rows and columns, plus a zero row.
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = coef(rng);
        for (std::size_t i = 3; i < 6; ++i)
            for (std::size_t j = 3; j < 6; ++j) m(i, j) = coef(rng);
        CHECK(block_rank(m) == rank(m));
    }
}

TEST_CASE("matrices print row by row") {
    CHECK(to_string(Matrix{{1, frac(-1, 2)}, {0, 3}}).find("-1/2") != std::string::npos);
}
