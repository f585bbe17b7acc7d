#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qcldpc/errors.hpp"
#include "qcldpc/permanent.hpp"

using namespace qcldpc;
using qcldpc::test::mk;

TEST_CASE("colliding 2x2 permanents vanish") {
    CHECK(perm_poly(mk(15, {{{1}, {2}}, {{5}, {6}}})).is_zero());
    CHECK(perm_poly(mk(15, {{{4}, {8}}, {{3}, {7}}})).is_zero());
}

TEST_CASE("small permanents by hand") {
    auto p = RingPoly::from_support(9, {2, 5});
    CHECK(perm_poly(mk(9, {{{2, 5}}})) == p);

    // perm [[1,1],[1,x]] = x + 1
    CHECK(perm_poly(mk(4, {{{0}, {0}}, {{0}, {1}}})) ==
          RingPoly::from_support(4, {0, 1}));
}

TEST_CASE("zero row forces a zero permanent") {
    auto B = mk(7, {{{1}, {2}, {3}},
                    {{}, {}, {}},
                    {{4}, {5}, {6}}});
    CHECK(perm_poly(B).is_zero());
}

TEST_CASE("permanent guards") {
    CHECK_THROWS_AS(perm_poly(PolyMatrix(5, 2, 3)), InputError);
    CHECK_THROWS_AS(perm_poly(PolyMatrix(5, 13, 13)), LimitError);

    CHECK_THROWS_AS(perm_int(WeightMatrix(2, 3)), InputError);
    CHECK_THROWS_AS(perm_int(WeightMatrix(13, 13)), LimitError);

    WeightMatrix neg(2, 2, 1);
    neg.set(0, 1, -1);
    CHECK_THROWS_AS(perm_int(neg), InputError);

    WeightMatrix big(8, 8, 200);
    CHECK_THROWS_AS(perm_int(big), LimitError);
}

TEST_CASE("integer permanents by hand") {
    WeightMatrix ones(2, 2, 1);
    CHECK(perm_int(ones) == 2);

    WeightMatrix A(2, 2);
    A.set(0, 0, 2);
    A.set(0, 1, 2);
    A.set(1, 0, 0);
    A.set(1, 1, 1);
    CHECK(perm_int(A) == 2);

    CHECK(perm_int(WeightMatrix(3, 3, 1)) == 6);

    // 0/1 matrix: permanent counts perfect matchings.
    WeightMatrix path(3, 3, 1);
    path.set(0, 2, 0);
    path.set(2, 0, 0);
    CHECK(perm_int(path) == 3);
}

TEST_CASE("permanent against the permutation-sum oracle") {
    std::mt19937_64 rng(1003);
    std::uniform_int_distribution<std::uint32_t> rd(1, 16);
    std::uniform_int_distribution<std::size_t> md(1, 4);
    for (int it = 0; it < 1000; ++it) {
        const std::uint32_t r = rd(rng);
        const std::size_t m = md(rng);
        auto B = test::random_matrix(rng, m, m, r, std::min<int>(3, static_cast<int>(r)));
        auto expect = oracle::perm_poly_brute(B);
        CHECK(perm_poly(B) == expect);

        auto A = weight_matrix(B);
        CHECK(perm_int(A) == oracle::perm_int_brute(A));
        CHECK(poly_weight(expect) <= perm_int(A));
    }
}

TEST_CASE("permanent is invariant under row and column swaps") {
    std::mt19937_64 rng(1004);
    for (int it = 0; it < 100; ++it) {
        auto B = test::random_matrix(rng, 3, 3, 11, 2);
        const std::size_t rs[] = {1, 2, 0}, cs[] = {2, 0, 1};
        auto P = submatrix(B, rs, cs);
        CHECK(perm_poly(B) == perm_poly(P));
    }
}
