// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcldpc/cycles.hpp"
#include "qcldpc/ext_int.hpp"
#include "qcldpc/qc_matrix.hpp"

namespace qcldpc {

struct BoundReport {
    ExtInt value;
    // Column subset achieving the bound, ascending; empty when value is +inf.
    std::vector<std::size_t> achieving_subset;
    // Codeword witnessing the bound (bound_eq1 only).
    std::optional<PolyVector> witness;
    // Equal-products witness (bound_girth_adjusted only).
    std::optional<CycleWitness> cycle_witness;
};

// Codeword supported on the J+1 columns S: position i in S carries the
// permanent of H with column i removed from S, all other positions zero.
// Satisfies H c^T = 0 by cofactor expansion; verified internally.
PolyVector construct_codeword(const PolyMatrix& H, const std::vector<std::size_t>& S);

// min over (J+1)-subsets S of sum of permanent weights of the J+1 cofactor
// submatrices, skipping S whose codeword is identically zero. Subsets are
// scanned in lexicographic order and the first achiever is kept.
BoundReport bound_eq1(const PolyMatrix& H);

// Same scan over the weight matrix with integer permanents; r-independent
// and an upper bound for every modulus admitting A as a weight matrix.
BoundReport bound_eq2(const WeightMatrix& A);

// (J+1)!; the distance cap for monomial matrices with J rows.
std::uint64_t bound_factorial(std::size_t J);

// (J+1)! - 2 (J-R+1)! where R is the largest order of an equal-products
// witness found (R from min(J, L, kEqualProductsGuard) down is probed; the
// largest R with a witness wins). Falls back to bound_factorial when no
// witness exists.
BoundReport bound_girth_adjusted(const PolyMatrix& H);

}  // namespace qcldpc
