// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#include "qcldpc/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "qcldpc/errors.hpp"
#include "qcldpc/permanent.hpp"

namespace qcldpc {

namespace {

bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    const std::size_t k = s.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (s[i] + 1 <= n - (k - i)) {
            ++s[i];
            for (std::size_t t = i + 1; t < k; ++t) s[t] = s[t - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_subset(std::size_t k) {
    std::vector<std::size_t> s(k);
    std::iota(s.begin(), s.end(), 0);
    return s;
}

void require_subset_room(std::size_t J, std::size_t L) {
    if (L < J + 1)
        throw InputError("need at least " + std::to_string(J + 1) +
                         " columns, have " + std::to_string(L));
}

WeightMatrix wm_submatrix_drop(const WeightMatrix& A,
                               const std::vector<std::size_t>& col_set,
                               std::size_t dropped) {
    WeightMatrix B(A.rows(), col_set.size() - 1);
    std::size_t out = 0;
    for (std::size_t c : col_set) {
        if (c == dropped) continue;
        for (std::size_t j = 0; j < A.rows(); ++j) B.set(j, out, A.at(j, c));
        ++out;
    }
    return B;
}

}  // namespace

PolyVector construct_codeword(const PolyMatrix& H,
                              const std::vector<std::size_t>& S) {
    if (S.size() != H.rows() + 1)
        throw InputError("column subset must have " +
                         std::to_string(H.rows() + 1) + " entries, has " +
                         std::to_string(S.size()));
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (S[i] >= H.cols())
            throw InputError("column " + std::to_string(S[i]) +
                             " out of range");
        if (i > 0 && S[i] <= S[i - 1])
            throw InputError("column subset must be strictly increasing");
    }

    PolyVector c(H.cols(), RingPoly(H.modulus()));
    for (std::size_t i = 0; i < S.size(); ++i)
        c[S[i]] = perm_poly(submatrix_drop(H, S, S[i]));
    if (!is_codeword(H, c))
        throw InternalError("cofactor vector fails the parity checks");
    return c;
}

BoundReport bound_eq1(const PolyMatrix& H) {
    const std::size_t J = H.rows(), L = H.cols();
    require_subset_room(J, L);

    BoundReport rep;
    auto S = first_subset(J + 1);
    do {
        auto c = construct_codeword(H, S);
        const std::uint64_t w = polyvec_weight(c);
        if (w == 0) continue;
        if (rep.value.is_inf() || ExtInt::of(w) < rep.value) {
            rep.value = ExtInt::of(w);
            rep.achieving_subset = S;
            rep.witness = std::move(c);
        }
    } while (next_subset(S, L));
    return rep;
}

BoundReport bound_eq2(const WeightMatrix& A) {
    const std::size_t J = A.rows(), L = A.cols();
    require_subset_room(J, L);

    BoundReport rep;
    auto S = first_subset(J + 1);
    do {
        std::uint64_t sum = 0;
        for (std::size_t c : S) sum += perm_int(wm_submatrix_drop(A, S, c));
        if (sum == 0) continue;
        if (rep.value.is_inf() || ExtInt::of(sum) < rep.value) {
            rep.value = ExtInt::of(sum);
            rep.achieving_subset = S;
        }
    } while (next_subset(S, L));
    return rep;
}

std::uint64_t bound_factorial(std::size_t J) {
    if (J >= 20)
        throw LimitError("factorial cap overflows 64 bits for " +
                         std::to_string(J) + " rows");
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= J + 1; ++k) f *= k;
    return f;
}

BoundReport bound_girth_adjusted(const PolyMatrix& H) {
    const std::size_t J = H.rows(), L = H.cols();
    if (weight_matrix(H).max_entry() > 1)
        throw InputError("girth-adjusted cap needs a monomial matrix");
    require_subset_room(J, L);

    BoundReport rep;
    const std::size_t top = std::min({J, L, kEqualProductsGuard});
    for (std::size_t R = top; R >= 2; --R) {
        auto w = equal_products(H, R);
        if (!w) continue;
        rep.cycle_witness = std::move(w);
        rep.value = ExtInt::of(bound_factorial(J) - 2 * bound_factorial(J - R));
        return rep;
    }
    rep.value = ExtInt::of(bound_factorial(J));
    return rep;
}

}  // namespace qcldpc
