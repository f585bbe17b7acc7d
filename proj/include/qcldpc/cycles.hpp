// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcldpc/ext_int.hpp"
#include "qcldpc/qc_matrix.hpp"

namespace qcldpc {

// Bipartite Tanner graph: one variable node per scalar column, one check
// node per scalar row, an edge per nonzero bit.
struct TannerGraph {
    std::size_t n_var = 0;
    std::size_t n_chk = 0;
    std::vector<std::vector<std::uint32_t>> chk_adj;  // per check, sorted variable ids
    std::vector<std::vector<std::uint32_t>> var_adj;  // per variable, sorted check ids

    std::size_t vertex_count() const { return n_var + n_chk; }
    std::size_t edge_count() const;
};

TannerGraph build_tanner(const ScalarMatrix& Hs);

// Length of the shortest simple cycle; +inf for a forest.
ExtInt girth(const TannerGraph& g);

// Max over all vertex pairs of the shortest-path length; +inf when
// disconnected, 0 for graphs with at most one vertex.
ExtInt diameter(const TannerGraph& g);

// Two distinct column assignments on the same R rows x R columns whose entry
// products agree in the ring. sigma/tau map position t of row_set to an
// actual column id, and differ at every position. When pi = sigma^-1 ∘ tau
// is a single R-cycle and the products are nonzero, the expanded Tanner
// graph contains a cycle of length 2R.
struct CycleWitness {
    std::size_t R = 0;
    std::vector<std::size_t> row_set;
    std::vector<std::size_t> col_set;
    std::vector<std::size_t> sigma;
    std::vector<std::size_t> tau;
    bool pi_single_cycle = false;
    // Human-readable exponent identity, e.g. "1 + 6 = 2 + 5 (mod 15)".
    std::string equation;
};

// 4-cycle test for monomial matrices: a 2x2 submatrix [[x^a,x^b],[x^c,x^d]]
// with all entries nonzero and a + d = b + c (mod r). First hit in
// lexicographic (row pair, column pair) order.
std::optional<CycleWitness> detect_4cycle_type1(const PolyMatrix& H);

// 3x3 permanent-weight-drop scan for monomial matrices. A witness with R=3
// (derangement pair) certifies a 6-cycle; a witness with R=2 means the drop
// came from a 4-cycle hiding in the 3x3.
std::optional<CycleWitness> detect_6cycle_type1(const PolyMatrix& H);

inline constexpr std::size_t kEqualProductsGuard = 5;

// Exhaustive equal-elementary-products search at a fixed R over monomial
// matrices; assignments with a zero entry are skipped.
std::optional<CycleWitness> equal_products(const PolyMatrix& H, std::size_t R);

// Girth caps readable off the weight matrix alone (searched modulo row and
// column permutation and transposition, entrywise-dominating submatrices):
//   [[1,1,1],[1,1,1]] -> <= 12, [[1,1],[1,2]] -> <= 10,
//   [[2,2]] -> <= 8,            [[3]] -> <= 6.
// Returns the tightest applicable cap, +inf when no pattern occurs.
ExtInt wm_girth_caps(const WeightMatrix& A);

struct FourCycleViolation {
    int condition = 0;  // 1..5, see type2_4cycle_free
    std::vector<std::size_t> row_set;
    std::vector<std::size_t> col_set;
    std::string detail;
};

struct FourCycleFreeResult {
    bool pass = true;
    std::vector<FourCycleViolation> violations;
};

// Exact 4-cycle-freeness test for matrices with entries of weight <= 2.
// The five checked conditions:
//   1. r even: no binomial x^a + x^b with gcd(|a-b|, r) = r/2
//      (the polynomial condition gcd(x^a+x^b, 1+x^r) != 1+x^{r/2} collapses
//      to this integer test);
//   2. binomial pairs sharing a row multiply to weight 4;
//   3. binomial pairs sharing a column multiply to weight 4;
//   4. 2x2 submatrices with monomial diagonal and binomial antidiagonal (or
//      permutations) keep both split permanents at weight 3;
//   5. every other all-nonzero 2x2 submatrix reaches the maximal permanent
//      weight, i.e. no diagonal product term collides with an antidiagonal
//      product term.
FourCycleFreeResult type2_4cycle_free(const PolyMatrix& H);

}  // namespace qcldpc
