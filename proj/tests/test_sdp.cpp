#include "doctest.h"

#include "lascoux/errors.hpp"
#include "lascoux/pascal.hpp"
#include "lascoux/sdp.hpp"

using namespace lascoux;

TEST_CASE("query validation") {
    CHECK_NOTHROW(validate({LType::C, 1, 2, 1}));
    CHECK_NOTHROW(validate({LType::D, 1, 2, 0}));
    CHECK_THROWS_AS(validate({LType::C, 0, 2, 1}), input_error);
    CHECK_THROWS_AS(validate({LType::C, 1, 0, 0}), input_error);
    CHECK_THROWS_AS(validate({LType::C, 1, 2, 0}), input_error);
    CHECK_THROWS_AS(validate({LType::C, 1, 2, 2}), input_error);
    CHECK_THROWS_AS(validate({LType::A, 1, 3, 0}), input_error);
    CHECK_THROWS_AS(validate({LType::D, 1, 2, -1}), input_error);
    CHECK_THROWS_AS(validate({LType::D, 1, 2, 2}), input_error);
}

TEST_CASE("degree thresholds") {
    CHECK(delta_degree_threshold(LType::C, 1) == 1);
    CHECK(delta_degree_threshold(LType::C, 2) == 3);
    CHECK(delta_degree_threshold(LType::C, 3) == 6);
    CHECK(delta_degree_threshold(LType::A, 1) == 1);
    CHECK(delta_degree_threshold(LType::A, 2) == 4);
    CHECK(delta_degree_threshold(LType::A, 3) == 9);
    CHECK(delta_degree_threshold(LType::D, 1) == 1);
    CHECK(delta_degree_threshold(LType::D, 2) == 6);
    CHECK(delta_degree_threshold(LType::D, 3) == 15);
}

TEST_CASE("delta values for corank one") {
    SchurOracle oracle;
    MemoTable memo;
    // delta(1, n, n-1) = n and delta(2, n, n-1) = n(n-1) in every type column
    for (int n = 2; n <= 6; ++n) {
        CHECK(delta_value({LType::C, 1, n, n - 1}, oracle, &memo) == BigRational(n));
        CHECK(delta_value({LType::A, 1, n, n - 1}, oracle, &memo) == BigRational(n));
        CHECK(delta_value({LType::D, 1, n, n - 1}, oracle, &memo) == BigRational(n));
        CHECK(delta_value({LType::C, 2, n, n - 1}, oracle, &memo) == BigRational(n * (n - 1)));
    }
    CHECK(delta_value({LType::C, 2, 3, 2}, oracle, &memo) == BigRational(6));
}

TEST_CASE("single index sets make delta a psi times LP product") {
    SchurOracle oracle;
    MemoTable memo;
    for (int m = 1; m <= 6; ++m)
        for (int n = 2; n <= 7; ++n) {
            const BigRational direct = delta_value({LType::C, m, n, n - 1}, oracle, &memo);
            const BigRational product =
                psi_via_minors(IndexSet({m - 1})) * lp_value_C(IndexSet({m - 1}), n, &memo);
            CHECK(direct == product);
        }
}

TEST_CASE("below the threshold the sum is empty") {
    SchurOracle oracle;
    MemoTable memo;
    for (int n = 3; n <= 6; ++n) {
        CHECK(delta_value({LType::C, 2, n, n - 2}, oracle, &memo) == BigRational(0));
        CHECK(delta_value({LType::A, 3, n, n - 2}, oracle, &memo) == BigRational(0));
    }
    for (int n = 2; n <= 5; ++n)
        CHECK(delta_value({LType::D, 5, n, n - 2}, oracle, &memo) == BigRational(0));
}

TEST_CASE("two element alpha closed form") {
    CHECK(alpha_two_element(0, 1) == BigRational(1));
    CHECK(alpha_two_element(1, 2) == BigRational(1));
    CHECK(alpha_two_element(0, 2) == BigRational(1));
    CHECK(alpha_two_element(1, 3) == BigRational(2));
    CHECK(alpha_two_element(2, 3) == BigRational(2));
    CHECK_THROWS_AS(alpha_two_element(2, 2), input_error);
    CHECK_THROWS_AS(alpha_two_element(-1, 2), input_error);
    SchurOracle oracle;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            CHECK(alpha_two_element(i, j) == oracle.alpha(IndexSet({i, j})));
}

TEST_CASE("delta polynomials for corank one") {
    SchurOracle oracle;
    MemoTable memo;

    const auto p1 = delta_polynomial(LType::C, 1, 1, oracle, &memo);
    CHECK(p1 == RationalPolynomial::from_coefficients({BigRational(0), BigRational(1)}));

    const auto p2 = delta_polynomial(LType::C, 2, 1, oracle, &memo);
    CHECK(p2 == RationalPolynomial::from_coefficients(
                    {BigRational(0), BigRational(-1), BigRational(1)}));

    const auto d3 = delta_polynomial(LType::D, 3, 1, oracle, &memo);
    CHECK(d3 == RationalPolynomial::from_coefficients(
                    {BigRational(0), BigRational(1), BigRational(-2), BigRational(1)}));

    const auto a2 = delta_polynomial(LType::A, 2, 1, oracle, &memo);
    CHECK(a2 == RationalPolynomial::from_coefficients(
                    {BigRational(0), BigRational(-1), BigRational(1)}));
}

TEST_CASE("corank one leading coefficients match the closed form") {
    SchurOracle oracle;
    MemoTable memo;
    CHECK(lc_delta_s1(LType::C, 1) == BigRational(1));
    CHECK(lc_delta_s1(LType::C, 3) == BigRational(2, 3));
    CHECK(lc_delta_s1(LType::A, 1) == BigRational(1));
    CHECK(lc_delta_s1(LType::A, 2) == BigRational(1));
    CHECK(lc_delta_s1(LType::A, 3) == BigRational(1));
    CHECK(lc_delta_s1(LType::D, 1) == BigRational(1));
    CHECK(lc_delta_s1(LType::D, 2) == BigRational(1));
    for (int m = 1; m <= 5; ++m)
        for (LType type : {LType::C, LType::A, LType::D}) {
            const auto p = delta_polynomial(type, m, 1, oracle, &memo);
            CHECK(p.degree() == m);
            CHECK(p.leading_coefficient() == lc_delta_s1(type, m));
        }
}

TEST_CASE("degree law at higher corank") {
    SchurOracle oracle;
    MemoTable memo;
    for (int m : {3, 4, 5})
        CHECK(delta_polynomial(LType::C, m, 2, oracle, &memo).degree() == m);
    for (int m : {4, 5})
        CHECK(delta_polynomial(LType::A, m, 2, oracle, &memo).degree() == m);
    // below the threshold the reconstruction is still exact, just of lower degree
    const auto below = delta_polynomial(LType::C, 2, 2, oracle, &memo);
    CHECK(below.is_zero());
}

TEST_CASE("delta values are nonnegative integers") {
    SchurOracle oracle;
    MemoTable memo;
    for (int m = 1; m <= 5; ++m)
        for (int n = 2; n <= 5; ++n)
            for (int s = 1; s < n; ++s)
                for (LType type : {LType::C, LType::A, LType::D}) {
                    const auto v = delta_value({type, m, n, n - s}, oracle, &memo);
                    CHECK(v.is_integer());
                    CHECK(v >= BigRational(0));
                }
}
