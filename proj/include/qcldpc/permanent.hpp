// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "qcldpc/qc_matrix.hpp"

namespace qcldpc {

// Permanents only ever see (J+1 choose 1)-sized minors of parity-check
// matrices, so J <= 11 covers everything while keeping worst-case cost sane.
inline constexpr std::size_t kPermanentSideGuard = 12;

// Permanent of a square polynomial matrix, computed in the ring. Over F2 the
// permanent and determinant coincide, which is what makes the codeword
// construction work.
RingPoly perm_poly(const PolyMatrix& B);

// Permanent of a square integer matrix over Z. Throws LimitError on 64-bit
// overflow (cannot happen for weight matrices of type <= 3 at guarded sizes).
std::uint64_t perm_int(const WeightMatrix& B);

}  // namespace qcldpc
