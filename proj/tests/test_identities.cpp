#include "doctest.h"

#include <set>

#include "lascoux/errors.hpp"
#include "lascoux/identities.hpp"

using namespace lascoux;

namespace {

IdentityInstance inst(IdentityName name, std::vector<BigRational> x,
                      std::vector<BigRational> y = {}) {
    IdentityInstance out;
    out.name = name;
    out.r = (int)x.size();
    out.x = std::move(x);
    out.y = std::move(y);
    return out;
}

} // namespace

TEST_CASE("identity names round trip") {
    for (IdentityName name : {IdentityName::double_sum, IdentityName::sum,
                              IdentityName::double_product, IdentityName::product})
        CHECK(identity_from_str(identity_name_str(name)) == name);
    CHECK_THROWS_AS(identity_from_str("triple_sum"), input_error);
    CHECK(identity_uses_y(IdentityName::double_sum));
    CHECK(identity_uses_y(IdentityName::double_product));
    CHECK(!identity_uses_y(IdentityName::sum));
    CHECK(!identity_uses_y(IdentityName::product));
}

TEST_CASE("r = 1 cases check by hand") {
    // sum: x_1 = x_1, no correction factors
    CHECK(check_identity(inst(IdentityName::sum, {BigRational(7, 3)})));
    // double_sum at x = (1), y = (2): 1 + 2 + 1 = 1 * 4/3 + 2 * 4/3
    CHECK(check_identity(inst(IdentityName::double_sum, {BigRational(1)}, {BigRational(2)})));
    // product: x_1 = (x_1 + 2) - 2
    CHECK(check_identity(inst(IdentityName::product, {BigRational(5)})));
    CHECK(check_identity(inst(IdentityName::double_product, {BigRational(3)}, {BigRational(1, 2)})));
}

TEST_CASE("hand picked r = 2 and r = 3 instances") {
    const std::vector<BigRational> x2 = {BigRational(2), BigRational(9, 2)};
    const std::vector<BigRational> y2 = {BigRational(1, 3), BigRational(5)};
    const std::vector<BigRational> x3 = {BigRational(3), BigRational(13, 2), BigRational(10)};
    CHECK(check_identity(inst(IdentityName::sum, x2)));
    CHECK(check_identity(inst(IdentityName::sum, x3)));
    CHECK(check_identity(inst(IdentityName::product, x2)));
    CHECK(check_identity(inst(IdentityName::product, x3)));
    CHECK(check_identity(inst(IdentityName::double_sum, x2, y2)));
    CHECK(check_identity(inst(IdentityName::double_product, x2, y2)));
}

TEST_CASE("instance shape is validated") {
    // y on a single-family identity
    CHECK_THROWS_AS(check_identity(inst(IdentityName::sum, {BigRational(2)}, {BigRational(3)})),
                    input_error);
    // missing y on a double identity
    CHECK_THROWS_AS(check_identity(inst(IdentityName::double_sum, {BigRational(2)})), input_error);
    // r disagreeing with the coordinate count
    IdentityInstance bad = inst(IdentityName::sum, {BigRational(2), BigRational(3)});
    bad.r = 1;
    CHECK_THROWS_AS(check_identity(bad), input_error);
    IdentityInstance empty = inst(IdentityName::sum, {});
    CHECK_THROWS_AS(check_identity(empty), input_error);
}

TEST_CASE("poles surface as input errors, never as false") {
    // x_1 = x_2 pole of the difference products
    CHECK_THROWS_AS(
        check_identity(inst(IdentityName::sum, {BigRational(2), BigRational(2)})), input_error);
    // x + y = 0 pole of double_sum
    CHECK_THROWS_AS(
        check_identity(inst(IdentityName::double_sum, {BigRational(2)}, {BigRational(-2)})),
        input_error);
    // x = -1 pole of double_product
    CHECK_THROWS_AS(
        check_identity(inst(IdentityName::double_product, {BigRational(-1)}, {BigRational(3)})),
        input_error);
    // x_1 + x_2 = -3 pole of product
    CHECK_THROWS_AS(
        check_identity(inst(IdentityName::product, {BigRational(-1), BigRational(-2)})),
        input_error);
    // x_1 + x_2 = 1 pole of sum
    CHECK_THROWS_AS(
        check_identity(inst(IdentityName::sum, {BigRational(1, 4), BigRational(3, 4)})),
        input_error);
}

TEST_CASE("sampled instances are deterministic in the seed") {
    for (IdentityName name : {IdentityName::double_sum, IdentityName::sum,
                              IdentityName::double_product, IdentityName::product}) {
        const auto a = random_admissible_point(name, 3, 987654321);
        const auto b = random_admissible_point(name, 3, 987654321);
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
        const auto c = random_admissible_point(name, 3, 987654322);
        CHECK(a.x != c.x);
    }
    // distinct identities draw from distinct streams
    const auto s = random_admissible_point(IdentityName::sum, 2, 11);
    const auto p = random_admissible_point(IdentityName::product, 2, 11);
    CHECK(s.x != p.x);
}

TEST_CASE("sampled instances avoid every pole family") {
    for (int r = 1; r <= 4; ++r)
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const auto inst = random_admissible_point(IdentityName::double_sum, r, seed);
            REQUIRE((int)inst.x.size() == r);
            REQUIRE((int)inst.y.size() == r);
            const std::set<BigRational> bad_same = {BigRational(0), BigRational(1), BigRational(-1),
                                                    BigRational(-2), BigRational(-3)};
            const std::set<BigRational> bad_cross = {BigRational(0), BigRational(-1), BigRational(-2)};
            for (size_t a = 0; a < inst.x.size(); ++a) {
                for (size_t b = 0; b < inst.x.size(); ++b) {
                    if (a != b) {
                        CHECK(inst.x[a] != inst.x[b]);
                        CHECK(inst.y[a] != inst.y[b]);
                    }
                    CHECK(bad_same.count(inst.x[a] + inst.x[b]) == 0);
                    CHECK(bad_same.count(inst.y[a] + inst.y[b]) == 0);
                    CHECK(bad_cross.count(inst.x[a] + inst.y[b]) == 0);
                }
            }
        }
}

TEST_CASE("identities hold on sampled instances") {
    for (IdentityName name : {IdentityName::double_sum, IdentityName::sum,
                              IdentityName::double_product, IdentityName::product})
        for (int r = 1; r <= 3; ++r)
            for (std::uint64_t seed = 100; seed < 110; ++seed)
                CHECK(check_identity(random_admissible_point(name, r, seed)));
}

TEST_CASE("impossible budgets exhaust as resource errors") {
    SamplerBudget cramped;
    cramped.max_abs_numerator = 0; // every coordinate is 0, always a pole
    cramped.max_resamples = 50;
    CHECK_THROWS_AS(random_admissible_point(IdentityName::sum, 2, 1, cramped), resource_error);
    CHECK_THROWS_AS(random_admissible_point(IdentityName::sum, 1, 1, SamplerBudget{40, 12, 0}),
                    resource_error);
}

TEST_CASE("sampler validates r") {
    CHECK_THROWS_AS(random_admissible_point(IdentityName::sum, 0, 1), input_error);
    CHECK_THROWS_AS(random_admissible_point(IdentityName::sum, -2, 1), input_error);
}
