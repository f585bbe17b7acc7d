// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "qcldpc/ext_int.hpp"
#include "qcldpc/qc_matrix.hpp"

namespace qcldpc {

// Equivalence class of weight matrices under row and column permutation
// (transposition deliberately not included).
struct WmClass {
    WeightMatrix canonical;
    ExtInt bound;  // integer-permanent bound of the canonical representative
};

inline constexpr std::size_t kCanonRowGuard = 6;
inline constexpr std::size_t kCanonColGuard = 8;

// Lexicographic minimum (row-major entry order) over all row x column
// permutations. Brute force over column permutations with rows lex-sorted
// per candidate; guarded at 6 x 8.
WeightMatrix canonicalize_wm(const WeightMatrix& A);

// All J x L weight matrices with entries in [0, max_entry], every column
// summing to col_sum and every row to row_sum, up to equivalence. Sorted by
// descending bound, ties broken by lexicographic canonical form. Empty when
// J * row_sum != L * col_sum.
std::vector<WmClass> enumerate_wm(std::size_t J, std::size_t L,
                                  int col_sum, int row_sum, int max_entry);

}  // namespace qcldpc
