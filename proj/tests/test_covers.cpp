#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qcldpc/covers.hpp"
#include "qcldpc/distance.hpp"
#include "qcldpc/errors.hpp"

using namespace qcldpc;
using qcldpc::test::mk;

TEST_CASE("automatic split sends the lower exponent left") {
    auto s = split_auto(test::fx_binom34(46));
    CHECK(s.part1.at(0, 0) == RingPoly::monomial(46, 1));
    CHECK(s.part2.at(0, 0) == RingPoly::monomial(46, 2));
    CHECK(s.part1.at(1, 2) == RingPoly::monomial(46, 10));
    CHECK(s.part2.at(1, 2) == RingPoly::monomial(46, 20));
    CHECK(s.part1.at(2, 1) == RingPoly::monomial(46, 19));
    CHECK(s.part2.at(2, 1) == RingPoly::monomial(46, 25));
    CHECK(s.part1.at(2, 3) == RingPoly::monomial(46, 7));
    CHECK(s.part2.at(2, 3) == RingPoly::monomial(46, 14));
    // monomials stay in part1, zeros in neither
    CHECK(s.part1.at(0, 2) == RingPoly::monomial(46, 4));
    CHECK(s.part2.at(0, 2).is_zero());
    CHECK(s.part1.at(0, 1).is_zero());
    CHECK(s.part2.at(0, 1).is_zero());

    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 4; ++i) {
            auto recombined = poly_add(s.part1.at(j, i), s.part2.at(j, i));
            CHECK(recombined == test::fx_binom34(46).at(j, i));
        }
}

TEST_CASE("automatic split of a monomial grid is trivial") {
    auto s = split_auto(test::fx_mono34(31));
    CHECK(s.part1 == test::fx_mono34(31));
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 4; ++i) CHECK(s.part2.at(j, i).is_zero());
}

TEST_CASE("automatic split smallest case") {
    auto s = split_auto(mk(2, {{{0, 1}}}));
    CHECK(s.part1.at(0, 0) == RingPoly::monomial(2, 0));
    CHECK(s.part2.at(0, 0) == RingPoly::monomial(2, 1));
}

TEST_CASE("automatic split rejects heavier entries") {
    CHECK_THROWS_AS(split_auto(test::fx_trinom34()), InputError);
}

TEST_CASE("manual split takes part1 and complements it") {
    auto H = test::fx_binom34(46);
    auto auto_split = split_auto(H);
    auto manual = parse_split(H, auto_split.part1);
    CHECK(manual.part1 == auto_split.part1);
    CHECK(manual.part2 == auto_split.part2);

    // part1 must select a subset of each entry
    auto bad = auto_split.part1;
    bad.set(0, 1, RingPoly::monomial(46, 3));
    CHECK_THROWS_AS(parse_split(H, bad), InputError);

    CHECK_THROWS_AS(parse_split(H, PolyMatrix(46, 2, 4)), InputError);
    CHECK_THROWS_AS(parse_split(H, PolyMatrix(45, 3, 4)), InputError);

    // trinomial entries can be split manually
    auto T = test::fx_trinom34(31);
    PolyMatrix p1(31, 3, 4);
    p1.set(0, 0, RingPoly::from_support(31, {2, 4}));
    p1.set(0, 3, RingPoly::monomial(31, 1));
    p1.set(1, 1, RingPoly::from_support(31, {9, 10}));
    p1.set(1, 3, RingPoly::monomial(31, 5));
    p1.set(2, 2, RingPoly::from_support(31, {7, 14}));
    p1.set(2, 3, RingPoly::monomial(31, 25));
    auto ts = parse_split(T, p1);
    CHECK(ts.part2.at(0, 0) == RingPoly::monomial(31, 8));
    CHECK(ts.part2.at(1, 1) == RingPoly::monomial(31, 20));
    CHECK(ts.part2.at(2, 2) == RingPoly::monomial(31, 19));
    CHECK(ts.part2.at(0, 3).is_zero());
}

TEST_CASE("block cover layout") {
    auto H = mk(5, {{{0, 1}}});
    auto cover = build_cover_block(split_auto(H));
    CHECK(cover.rows() == 2);
    CHECK(cover.cols() == 2);
    CHECK(cover.at(0, 0) == RingPoly::monomial(5, 0));
    CHECK(cover.at(0, 1) == RingPoly::monomial(5, 1));
    CHECK(cover.at(1, 0) == RingPoly::monomial(5, 1));
    CHECK(cover.at(1, 1) == RingPoly::monomial(5, 0));

    auto C = build_cover_block(split_auto(test::fx_binom34(46)));
    CHECK(C.rows() == 6);
    CHECK(C.cols() == 8);
    // cross blocks carry part2
    CHECK(C.at(0, 4) == RingPoly::monomial(46, 2));
    CHECK(C.at(3, 0) == RingPoly::monomial(46, 2));
    CHECK(C.at(5, 1) == RingPoly::monomial(46, 25));
    CHECK(C.at(2, 5) == RingPoly::monomial(46, 25));
    CHECK(C.at(3, 4) == RingPoly::monomial(46, 1));
}

TEST_CASE("trivial split gives a block-diagonal cover") {
    auto C = build_cover_block(split_auto(test::fx_mono34(31)));
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(C.at(j, i) == test::fx_mono34(31).at(j, i));
            CHECK(C.at(j + 3, i + 4) == test::fx_mono34(31).at(j, i));
            CHECK(C.at(j, i + 4).is_zero());
            CHECK(C.at(j + 3, i).is_zero());
        }
}

TEST_CASE("interleaved cover expands cells in place") {
    auto C = build_cover_interleaved(split_auto(test::fx_binom34(46)));
    CHECK(C.rows() == 6);
    CHECK(C.cols() == 8);
    CHECK(C.at(0, 0) == RingPoly::monomial(46, 1));
    CHECK(C.at(0, 1) == RingPoly::monomial(46, 2));
    CHECK(C.at(1, 0) == RingPoly::monomial(46, 2));
    CHECK(C.at(1, 1) == RingPoly::monomial(46, 1));
    CHECK(C.at(2, 4) == RingPoly::monomial(46, 10));
    CHECK(C.at(2, 5) == RingPoly::monomial(46, 20));
    CHECK(C.at(4, 2) == RingPoly::monomial(46, 19));
    CHECK(C.at(4, 3) == RingPoly::monomial(46, 25));
    CHECK(C.at(4, 6) == RingPoly::monomial(46, 7));
    CHECK(C.at(4, 7) == RingPoly::monomial(46, 14));
    CHECK(C.at(5, 6) == RingPoly::monomial(46, 14));
    CHECK(C.at(5, 7) == RingPoly::monomial(46, 7));
    CHECK(C.at(0, 2).is_zero());
    CHECK(C.at(1, 3).is_zero());

    auto one = build_cover_interleaved(split_auto(mk(5, {{{0, 1}}})));
    CHECK(one == build_cover_block(split_auto(mk(5, {{{0, 1}}}))));
}

TEST_CASE("block and interleaved forms differ by the perfect shuffle") {
    std::mt19937_64 rng(5001);
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<std::size_t> Jd(1, 3), Ld(1, 4);
        std::uniform_int_distribution<std::uint32_t> rd(2, 9);
        auto H = test::random_type2(rng, Jd(rng), Ld(rng), rd(rng));
        auto s = split_auto(H);
        auto block = build_cover_block(s);
        auto inter = build_cover_interleaved(s);
        const std::size_t J = H.rows(), L = H.cols();
        for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t jb = 0; jb < J; ++jb)
                for (std::size_t q = 0; q < 2; ++q)
                    for (std::size_t ib = 0; ib < L; ++ib)
                        CHECK(inter.at(2 * jb + p, 2 * ib + q) ==
                              block.at(p * J + jb, q * L + ib));
    }
}

TEST_CASE("cover code parameters of the mixed grid") {
    auto C = build_cover_block(split_auto(test::fx_binom34(46)));
    auto Cs = expand_scalar(C);
    CHECK(Cs.n_cols() == 368);
    CHECK(gf2_rank(Cs) == 275);

    auto cls = classify(C);
    CHECK(cls.type_M == 1);
    REQUIRE(cls.regularity.has_value());
    CHECK(*cls.regularity == std::pair<int, int>{3, 4});

    auto Ci = build_cover_interleaved(split_auto(test::fx_binom34(46)));
    CHECK(gf2_rank(expand_scalar(Ci)) == 275);
    CHECK(*classify(Ci).regularity == std::pair<int, int>{3, 4});
}

TEST_CASE("cover projection verification") {
    auto base = test::fx_binom34(46);
    auto s = split_auto(base);
    CHECK(verify_cover_projection(build_cover_block(s), base));
    CHECK(verify_cover_projection(build_cover_interleaved(s), base));

    auto trivial = build_cover_block(split_auto(test::fx_mono34(31)));
    CHECK(verify_cover_projection(trivial, test::fx_mono34(31)));

    // rewiring one cell breaks the local bijections
    auto broken = build_cover_block(s);
    broken.set(0, 4, RingPoly::monomial(46, 3));
    CHECK_FALSE(verify_cover_projection(broken, base));

    CHECK_THROWS_AS(verify_cover_projection(base, base), InputError);
    auto wrong_r = build_cover_block(split_auto(test::fx_binom34(45)));
    CHECK_THROWS_AS(verify_cover_projection(wrong_r, base), InputError);
}

TEST_CASE("random covers always project") {
    std::mt19937_64 rng(5002);
    for (int it = 0; it < 30; ++it) {
        std::uniform_int_distribution<std::size_t> Jd(1, 3), Ld(1, 4);
        std::uniform_int_distribution<std::uint32_t> rd(2, 8);
        auto H = test::random_type2(rng, Jd(rng), Ld(rng), rd(rng));
        auto s = split_auto(H);
        CHECK(verify_cover_projection(build_cover_block(s), H));
        CHECK(verify_cover_projection(build_cover_interleaved(s), H));
    }
}

TEST_CASE("distance sandwich bounds") {
    CHECK(cover_distance_bounds(32) == std::pair<std::uint64_t, std::uint64_t>{32, 64});
    CHECK(cover_distance_bounds(1) == std::pair<std::uint64_t, std::uint64_t>{1, 2});
    CHECK_THROWS_AS(cover_distance_bounds(0), InputError);
}

TEST_CASE("measured distances respect the sandwich") {
    std::mt19937_64 rng(5003);
    int measured = 0;
    for (int it = 0; it < 200 && measured < 25; ++it) {
        std::uniform_int_distribution<std::size_t> Jd(1, 2), Ld(2, 3);
        std::uniform_int_distribution<std::uint32_t> rd(2, 5);
        auto H = test::random_type2(rng, Jd(rng), Ld(rng), rd(rng));
        auto base = dmin_exhaustive(H, 12, 1);
        if (base.dmin_status != DminStatus::exact || !base.dmin.has_value()) continue;
        auto cover = dmin_exhaustive(build_cover_block(split_auto(H)), 20, 2);
        if (cover.dmin_status != DminStatus::exact || !cover.dmin.has_value()) continue;
        auto [lo, hi] = cover_distance_bounds(*base.dmin);
        CHECK(*cover.dmin >= lo);
        CHECK(*cover.dmin <= hi);
        ++measured;
    }
    CHECK(measured == 25);
}

TEST_CASE("trivial split cover keeps the base distance") {
    auto H = mk(5, {{{0}, {1}, {3}}});
    auto base = dmin_exhaustive(H, 12, 1);
    auto cover = dmin_exhaustive(build_cover_block(split_auto(H)), 24, 2);
    REQUIRE(base.dmin.has_value());
    REQUIRE(cover.dmin.has_value());
    CHECK(*cover.dmin == *base.dmin);
}
