#include "doctest.h"

#include <variant>
#include <vector>

#include "lascoux/asymptotics.hpp"
#include "lascoux/errors.hpp"
#include "lascoux/lascoux.hpp"
#include "lascoux/pascal.hpp"
#include "lascoux/schur.hpp"

using namespace lascoux;

namespace {

std::vector<IndexSet> subsets_of(int n, int max_size) {
    std::vector<IndexSet> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> elems;
        for (int v = 0; v < n; ++v)
            if (mask & (1 << v)) elems.push_back(v);
        if ((int)elems.size() <= max_size) out.emplace_back(elems);
    }
    return out;
}

} // namespace

TEST_CASE("type names") {
    CHECK(type_name(LType::C) == "C");
    CHECK(type_from_name("A") == LType::A);
    CHECK(type_from_name("D") == LType::D);
    CHECK_THROWS_AS(type_from_name("B"), input_error);
    CHECK_THROWS_AS(type_from_name("c"), input_error);
}

TEST_CASE("type C values by recurrence") {
    CHECK(lp_value_C(IndexSet{}, 0) == BigRational(1));
    CHECK(lp_value_C(IndexSet{}, 7) == BigRational(1));
    for (int n = 0; n <= 6; ++n)
        CHECK(lp_value_C(IndexSet({0}), n) == BigRational(n));
    CHECK(lp_value_C(IndexSet({1}), 2) == BigRational(1));
    CHECK(lp_value_C(IndexSet({1}), 3) == BigRational(3));
    CHECK(lp_value_C(IndexSet({1}), 4) == BigRational(6));
    CHECK(lp_value_C(IndexSet({3}), 2) == BigRational(0)); // not a subset of [2]
    CHECK(lp_value_C(IndexSet({0, 1}), 2) == BigRational(1));
}

TEST_CASE("type C values equal complementary psi minors") {
    MemoTable memo;
    for (int n = 0; n <= 6; ++n)
        for (const auto& I : subsets_of(6, 3)) {
            const auto lp = lp_value_C(I, n, &memo);
            if (I.fits_in(n))
                CHECK(lp == psi_via_minors(complement_in(I, n)));
            else
                CHECK(lp == BigRational(0));
        }
}

TEST_CASE("type A values by recurrence") {
    CHECK(lp_value_A(IndexSet{}, IndexSet{}, 3) == BigRational(1));
    for (int n = 0; n <= 5; ++n)
        CHECK(lp_value_A(IndexSet({0}), IndexSet({0}), n) == BigRational(n));
    CHECK(lp_value_A(IndexSet({1}), IndexSet({0}), 2) == BigRational(1));
    CHECK_THROWS_AS(lp_value_A(IndexSet({2}), IndexSet({0, 1}), 3), input_error);
    CHECK_THROWS_AS(lp_value_A(IndexSet({1}), IndexSet{}, 3), input_error);
}

TEST_CASE("type A values equal complementary d coefficients") {
    MemoTable memo;
    SchurOracle oracle;
    const auto sets = subsets_of(4, 2);
    for (int n = 0; n <= 4; ++n)
        for (const auto& I : sets)
            for (const auto& J : sets) {
                if (I.size() != J.size()) continue;
                const auto lp = lp_value_A(I, J, n, &memo);
                if (I.fits_in(n) && J.fits_in(n))
                    CHECK(lp == oracle.d(complement_in(I, n), complement_in(J, n)));
                else
                    CHECK(lp == BigRational(0));
            }
}

TEST_CASE("type D values by recurrence") {
    CHECK(lp_value_D(IndexSet{}, 4) == BigRational(1));
    CHECK(lp_value_D(IndexSet({1}), 3) == BigRational(1));
    // 0 in I kills every n with n - |I| odd, so {0} survives at odd n only
    for (int n = 1; n <= 6; ++n) {
        const auto v = lp_value_D(IndexSet({0}), n);
        if (n % 2 == 1) CHECK(v == lp_value_D(IndexSet{}, n));
        else CHECK(v == BigRational(0));
    }
    CHECK(lp_value_D(IndexSet({0, 2}), 5) == BigRational(0));
    CHECK(lp_value_D(IndexSet({0, 2}), 4) == BigRational(2));
}

TEST_CASE("type D values equal complementary alpha coefficients") {
    MemoTable memo;
    SchurOracle oracle;
    for (int n = 0; n <= 6; ++n)
        for (const auto& I : subsets_of(5, 2)) {
            const auto lp = lp_value_D(I, n, &memo);
            if (I.fits_in(n))
                CHECK(lp == oracle.alpha(complement_in(I, n)));
            else
                CHECK(lp == BigRational(0));
        }
}

TEST_CASE("memoized and memoless runs agree") {
    MemoTable memo;
    CHECK(lp_value_C(IndexSet({1, 3}), 6, &memo) == lp_value_C(IndexSet({1, 3}), 6));
    CHECK(lp_value_A(IndexSet({0, 2}), IndexSet({1, 2}), 4, &memo) ==
          lp_value_A(IndexSet({0, 2}), IndexSet({1, 2}), 4));
    CHECK(lp_value_D(IndexSet({1, 4}), 6, &memo) == lp_value_D(IndexSet({1, 4}), 6));
    CHECK(memo.size() > 0);
    // stored entries replay to the same values
    for (const auto& [key, value] : memo.snapshot()) {
        switch (key.type) {
            case LType::C: CHECK(lp_value_C(key.I, key.n) == value); break;
            case LType::A: CHECK(lp_value_A(key.I, key.J, key.n) == value); break;
            case LType::D: CHECK(lp_value_D(key.I, key.n) == value); break;
        }
    }
}

TEST_CASE("negative n is zero for nonempty I and one for empty") {
    CHECK(lp_value_C(IndexSet({1}), -1) == BigRational(0));
    CHECK(lp_value_C(IndexSet{}, -1) == BigRational(1));
}

TEST_CASE("type C polynomial reconstruction") {
    const auto lp0 = lp_polynomial(LType::C, IndexSet({0}));
    const auto& p0 = std::get<RationalPolynomial>(lp0.body);
    CHECK(p0 == RationalPolynomial::from_coefficients({BigRational(0), BigRational(1)}));
    CHECK(lp0.validity_floor == 1);

    const auto lp1 = lp_polynomial(LType::C, IndexSet({1}));
    const auto& p1 = std::get<RationalPolynomial>(lp1.body);
    CHECK(p1 == RationalPolynomial::from_coefficients(
                    {BigRational(0), BigRational(-1, 2), BigRational(1, 2)}));
    CHECK(lp1.validity_floor == 2);

    const auto lpe = lp_polynomial(LType::C, IndexSet{});
    CHECK(std::get<RationalPolynomial>(lpe.body) ==
          RationalPolynomial::constant(BigRational(1)));
}

TEST_CASE("reconstruction matches values and the closed forms") {
    MemoTable memo;
    const std::vector<IndexSet> family = {
        IndexSet{}, IndexSet({0}), IndexSet({2}), IndexSet({0, 1}), IndexSet({1, 2}),
        IndexSet({0, 3})};
    for (const auto& I : family) {
        const auto lp = lp_polynomial(LType::C, I, IndexSet{}, &memo);
        const auto dl = degree_lc_C(I);
        const auto& p = std::get<RationalPolynomial>(lp.body);
        CHECK(p.degree() == dl.degree);
        CHECK(p.leading_coefficient() == dl.leading_coefficient);
        for (long n = lp.validity_floor; n < lp.validity_floor + 6; ++n)
            CHECK(lp.evaluate(n) == lp_value_C(I, (int)n, &memo));
    }
}

TEST_CASE("type A polynomial reconstruction") {
    MemoTable memo;
    const auto lp = lp_polynomial(LType::A, IndexSet({1}), IndexSet({0}), &memo);
    const auto& p = std::get<RationalPolynomial>(lp.body);
    CHECK(p.degree() == 2);
    CHECK(p.leading_coefficient() == BigRational(1, 2));
    for (long n = lp.validity_floor; n < lp.validity_floor + 5; ++n)
        CHECK(lp.evaluate(n) == lp_value_A(IndexSet({1}), IndexSet({0}), (int)n, &memo));

    const auto zz = lp_polynomial(LType::A, IndexSet({0}), IndexSet({0}));
    CHECK(std::get<RationalPolynomial>(zz.body) ==
          RationalPolynomial::from_coefficients({BigRational(0), BigRational(1)}));
}

TEST_CASE("type D quasipolynomial reconstruction") {
    MemoTable memo;
    const auto lp1 = lp_polynomial(LType::D, IndexSet({1}), IndexSet{}, &memo);
    const auto& q1 = std::get<QuasiPolynomial2>(lp1.body);
    CHECK(q1.even_branch == RationalPolynomial::from_coefficients({BigRational(0), BigRational(1)}));
    CHECK(q1.odd_branch == RationalPolynomial::from_coefficients({BigRational(0), BigRational(1)}));

    // 0 in I: the branch of the wrong parity is identically zero
    const auto lp02 = lp_polynomial(LType::D, IndexSet({0, 2}), IndexSet{}, &memo);
    const auto& q02 = std::get<QuasiPolynomial2>(lp02.body);
    CHECK(q02.even_branch ==
          RationalPolynomial::from_coefficients({BigRational(0), BigRational(-1), BigRational(1)}));
    CHECK(q02.odd_branch.is_zero());

    for (const auto& I : {IndexSet({2}), IndexSet({1, 3}), IndexSet({0, 1})}) {
        const auto lp = lp_polynomial(LType::D, I, IndexSet{}, &memo);
        for (long n = lp.validity_floor; n < lp.validity_floor + 8; ++n)
            CHECK(lp.evaluate(n) == lp_value_D(I, (int)n, &memo));
    }
}

TEST_CASE("lp_polynomial rejects misshapen input") {
    CHECK_THROWS_AS(lp_polynomial(LType::C, IndexSet({1}), IndexSet({0})), input_error);
    CHECK_THROWS_AS(lp_polynomial(LType::D, IndexSet({1}), IndexSet({0})), input_error);
    CHECK_THROWS_AS(lp_polynomial(LType::A, IndexSet({1}), IndexSet({0, 1})), input_error);
}

TEST_CASE("values are nonnegative integers") {
    MemoTable memo;
    for (int n = 0; n <= 7; ++n)
        for (const auto& I : subsets_of(5, 3)) {
            const auto v = lp_value_C(I, n, &memo);
            CHECK(v.is_integer());
            CHECK(v >= BigRational(0));
            const auto w = lp_value_D(I, n, &memo);
            CHECK(w.is_integer());
            CHECK(w >= BigRational(0));
        }
}
