// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared test matrices and random generators. The fx_* builders are the
// frozen inputs the expected values in the test files refer to.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "qcldpc/qc_matrix.hpp"
#include "qcldpc/ring_poly.hpp"

namespace qcldpc::test {

using Cell = std::vector<std::uint32_t>;
using CellGrid = std::vector<std::vector<Cell>>;

inline PolyMatrix mk(std::uint32_t r, const CellGrid& g) {
    PolyMatrix H(r, g.size(), g.empty() ? 0 : g[0].size());
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < g[j].size(); ++i) {
            Cell reduced = g[j][i];
            for (auto& e : reduced) e %= r;
            H.set(j, i, RingPoly::from_support(r, reduced));
        }
    return H;
}

inline WeightMatrix wmk(const std::vector<std::vector<int>>& rows) {
    WeightMatrix A(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < rows[j].size(); ++i) A.set(j, i, rows[j][i]);
    return A;
}

// 3x4 mixed-weight matrix over a tiny ring; the worked expansion fixture.
inline PolyMatrix fx_small34() {
    return mk(3, {{{0, 1}, {0}, {}, {2}},
                  {{2}, {0}, {1}, {2}},
                  {{}, {1}, {0, 2}, {1}}});
}

// Two 2x4 monomial matrices differing only in the second row; the first
// has colliding 2x2 products, the second does not.
inline PolyMatrix fx_mono24_a(std::uint32_t r = 15) {
    return mk(r, {{{1}, {2}, {4}, {8}}, {{5}, {6}, {3}, {7}}});
}
inline PolyMatrix fx_mono24_b(std::uint32_t r = 15) {
    return mk(r, {{{1}, {2}, {4}, {8}}, {{6}, {5}, {3}, {9}}});
}

// 3x4 monomial matrix with doubling exponent pattern; exponents reduce
// mod r, so small r values fold the pattern.
inline PolyMatrix fx_mono34(std::uint32_t r = 31) {
    return mk(r, {{{1}, {2}, {4}, {8}},
                  {{5}, {10}, {20}, {9}},
                  {{25}, {19}, {7}, {14}}});
}

// 3x4 matrix of binomials and monomials, (3,4)-regular, r = 46.
inline PolyMatrix fx_binom34(std::uint32_t r = 46) {
    return mk(r, {{{1, 2}, {}, {4}, {8}},
                  {{5}, {9}, {10, 20}, {}},
                  {{}, {19, 25}, {}, {7, 14}}});
}

// 3x4 matrix of trinomials in a diagonal layout plus a monomial column.
inline PolyMatrix fx_trinom34(std::uint32_t r = 31) {
    return mk(r, {{{2, 4, 8}, {}, {}, {1}},
                  {{}, {9, 10, 20}, {}, {5}},
                  {{}, {}, {7, 14, 19}, {25}}});
}

// 3x5 matrix whose last column is zero and whose rows are linearly
// dependent on every 4-column subset: the cofactor construction yields the
// all-zero vector there, while its top 2x5 submatrix does not.
inline PolyMatrix fx_rankdef35(std::uint32_t r = 6) {
    return mk(r, {{{0}, {0}, {0}, {0}, {}},
                  {{0}, {1}, {2}, {3}, {}},
                  {{}, {0, 1}, {0, 2}, {0, 3}, {}}});
}

// 3x3 monomial matrix with two equal permanent terms on a derangement
// pair: exponent sums 0+1+1 and 0+2+0 collide.
inline PolyMatrix fx_collide33(std::uint32_t r = 7) {
    return mk(r, {{{0}, {0}, {0}},
                  {{0}, {1}, {2}},
                  {{0}, {2}, {1}}});
}

// Same with a zero fourth column appended, making the subset bounds
// applicable while keeping the collision.
inline PolyMatrix fx_collide34(std::uint32_t r = 7) {
    return mk(r, {{{0}, {0}, {0}, {}},
                  {{0}, {1}, {2}, {}},
                  {{0}, {2}, {1}, {}}});
}

inline RingPoly random_poly(std::mt19937_64& rng, std::uint32_t r, int weight) {
    std::vector<std::uint32_t> all(r);
    for (std::uint32_t e = 0; e < r; ++e) all[e] = e;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(static_cast<std::size_t>(weight), r));
    return RingPoly::from_support(r, all);
}

// Monomial-or-zero entries.
inline PolyMatrix random_type1(std::mt19937_64& rng, std::size_t J, std::size_t L,
                               std::uint32_t r, double zero_prob = 0.25) {
    PolyMatrix H(r, J, L);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<std::uint32_t> exp(0, r - 1);
    for (std::size_t j = 0; j < J; ++j)
        for (std::size_t i = 0; i < L; ++i)
            if (coin(rng) >= zero_prob)
                H.set(j, i, RingPoly::monomial(r, exp(rng)));
    return H;
}

// Entry weights drawn from {0, 1, 2}.
inline PolyMatrix random_type2(std::mt19937_64& rng, std::size_t J, std::size_t L,
                               std::uint32_t r) {
    PolyMatrix H(r, J, L);
    std::uniform_int_distribution<int> wt(0, 2);
    for (std::size_t j = 0; j < J; ++j)
        for (std::size_t i = 0; i < L; ++i)
            H.set(j, i, random_poly(rng, r, wt(rng)));
    return H;
}

inline PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t J, std::size_t L,
                                std::uint32_t r, int max_weight) {
    PolyMatrix H(r, J, L);
    std::uniform_int_distribution<int> wt(0, max_weight);
    for (std::size_t j = 0; j < J; ++j)
        for (std::size_t i = 0; i < L; ++i)
            H.set(j, i, random_poly(rng, r, wt(rng)));
    return H;
}

}  // namespace qcldpc::test
