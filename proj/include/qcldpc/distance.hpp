// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qcldpc/bounds.hpp"
#include "qcldpc/ext_int.hpp"
#include "qcldpc/qc_matrix.hpp"

namespace qcldpc {

// Rank over GF(2) by bit-packed Gaussian elimination.
std::size_t gf2_rank(const ScalarMatrix& M);

// Basis of {v : M v^T = 0}; size is n_cols - rank.
std::vector<BitVec> nullspace_basis(const ScalarMatrix& M);

inline constexpr std::size_t kDminDefaultMaxDim = 28;

enum class DminStatus { exact, upper_only, capped };

struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::uint64_t> dmin;       // set only when status == exact
    ExtInt dmin_upper = ExtInt::infinity();  // +inf iff no nonzero codeword known
    DminStatus dmin_status = DminStatus::exact;
};

// Progress callback: (codewords enumerated, total); return false to stop,
// degrading the result to upper_only with the best weight seen so far.
using DminProgress = std::function<bool(std::uint64_t, std::uint64_t)>;

// Exact minimum distance of the code defined by H, enumerating all 2^k - 1
// nonzero codewords Gray-code style (one basis XOR per step). Dimensions
// above max_dim are not enumerated; the result falls back to the cheapest
// known upper bound with status capped. jobs == 0 picks the hardware
// concurrency; ranges are contiguous Gray-code slices, so any jobs value
// returns the same dmin.
CodeParams dmin_exhaustive(const PolyMatrix& H,
                           std::size_t max_dim = kDminDefaultMaxDim,
                           std::size_t jobs = 1,
                           const DminProgress& progress = nullptr);

// Lightest nonzero cofactor-construction codeword and its weight; weight
// equals the sum-of-permanent-weights bound. Requires rows + 1 <= cols.
struct DminUpperWitness {
    ExtInt weight = ExtInt::infinity();
    std::optional<PolyVector> witness;
};
DminUpperWitness dmin_upper_witness(const PolyMatrix& H);

}  // namespace qcldpc
