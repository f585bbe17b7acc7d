// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#include "qcldpc/permanent.hpp"

#include <bit>
#include <optional>
#include <vector>

#include "qcldpc/errors.hpp"

namespace qcldpc {

namespace {

void check_square(std::size_t rows, std::size_t cols) {
    if (rows != cols) throw InputError("permanent requires a square matrix");
    if (rows > kPermanentSideGuard)
        throw LimitError("matrix side " + std::to_string(rows) +
                         " exceeds permanent guard " +
                         std::to_string(kPermanentSideGuard));
}

// Expansion along rows, memoized on the set of used columns. The row index is
// always popcount(mask), so the mask alone keys the table.
RingPoly perm_poly_rec(const PolyMatrix& B, std::uint32_t mask,
                       std::vector<std::optional<RingPoly>>& memo) {
    const std::size_t m = B.rows();
    const std::size_t row = std::popcount(mask);
    if (row == m) return RingPoly::monomial(B.modulus(), 0);
    if (memo[mask]) return *memo[mask];
    RingPoly acc(B.modulus());
    for (std::size_t c = 0; c < m; ++c) {
        if (mask & (1u << c)) continue;
        const RingPoly& e = B.at(row, c);
        if (e.is_zero()) continue;
        acc = poly_add(acc, poly_mul(e, perm_poly_rec(B, mask | (1u << c), memo)));
    }
    memo[mask] = acc;
    return acc;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s;
    if (__builtin_add_overflow(a, b, &s))
        throw LimitError("integer permanent overflows 64 bits");
    return s;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t p;
    if (__builtin_mul_overflow(a, b, &p))
        throw LimitError("integer permanent overflows 64 bits");
    return p;
}

std::uint64_t perm_int_rec(const WeightMatrix& B, std::uint32_t mask,
                           std::vector<std::optional<std::uint64_t>>& memo) {
    const std::size_t m = B.rows();
    const std::size_t row = std::popcount(mask);
    if (row == m) return 1;
    if (memo[mask]) return *memo[mask];
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < m; ++c) {
        if (mask & (1u << c)) continue;
        const int e = B.at(row, c);
        if (e == 0) continue;
        acc = checked_add(acc, checked_mul(static_cast<std::uint64_t>(e),
                                           perm_int_rec(B, mask | (1u << c), memo)));
    }
    memo[mask] = acc;
    return acc;
}

}  // namespace

RingPoly perm_poly(const PolyMatrix& B) {
    check_square(B.rows(), B.cols());
    const std::size_t m = B.rows();
    for (std::size_t j = 0; j < m; ++j) {
        bool zero_row = true;
        for (std::size_t i = 0; i < m && zero_row; ++i)
            zero_row = B.at(j, i).is_zero();
        if (zero_row) return RingPoly(B.modulus());
    }
    std::vector<std::optional<RingPoly>> memo(std::size_t{1} << m);
    return perm_poly_rec(B, 0, memo);
}

std::uint64_t perm_int(const WeightMatrix& B) {
    check_square(B.rows(), B.cols());
    const std::size_t m = B.rows();
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i)
            if (B.at(j, i) < 0) throw InputError("negative weight entry");
    std::vector<std::optional<std::uint64_t>> memo(std::size_t{1} << m);
    return perm_int_rec(B, 0, memo);
}

}  // namespace qcldpc
