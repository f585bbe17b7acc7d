// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#include "qcldpc/wm_enum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qcldpc/bounds.hpp"
#include "qcldpc/errors.hpp"

namespace qcldpc {

namespace {

void check_canon_guards(std::size_t J, std::size_t L) {
    if (J > kCanonRowGuard)
        throw LimitError("matrix with " + std::to_string(J) +
                         " rows exceeds canonical-form guard " +
                         std::to_string(kCanonRowGuard));
    if (L > kCanonColGuard)
        throw LimitError("matrix with " + std::to_string(L) +
                         " columns exceeds canonical-form guard " +
                         std::to_string(kCanonColGuard));
}

// All length-L rows with entries in [0, max_entry] summing to sum, in
// lexicographic order.
void gen_rows(std::size_t L, int sum, int max_entry, std::vector<int>& cur,
              std::vector<std::vector<int>>& out) {
    const int slots = static_cast<int>(L - cur.size());
    if (sum > max_entry * slots) return;
    if (slots == 0) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= std::min(max_entry, sum); ++e) {
        cur.push_back(e);
        gen_rows(L, sum - e, max_entry, cur, out);
        cur.pop_back();
    }
}

struct Enumerator {
    std::size_t J;
    int max_entry;
    const std::vector<std::vector<int>>& rows;
    std::vector<int> col_rem;
    std::vector<std::size_t> chosen;
    std::set<std::vector<int>> seen;

    void emit() {
        WeightMatrix A(J, col_rem.size());
        for (std::size_t j = 0; j < J; ++j)
            for (std::size_t i = 0; i < col_rem.size(); ++i)
                A.set(j, i, rows[chosen[j]][i]);
        seen.insert(canonicalize_wm(A).flat());
    }

    // Rows are picked with non-decreasing indices; every class has a
    // representative with lex-sorted rows, so none is missed.
    void rec(std::size_t j, std::size_t from) {
        if (j == J) {
            emit();
            return;
        }
        const int headroom = max_entry * static_cast<int>(J - j - 1);
        for (std::size_t idx = from; idx < rows.size(); ++idx) {
            const auto& v = rows[idx];
            bool ok = true;
            for (std::size_t i = 0; ok && i < v.size(); ++i)
                ok = v[i] <= col_rem[i] && col_rem[i] - v[i] <= headroom;
            if (!ok) continue;
            for (std::size_t i = 0; i < v.size(); ++i) col_rem[i] -= v[i];
            chosen.push_back(idx);
            rec(j + 1, idx);
            chosen.pop_back();
            for (std::size_t i = 0; i < v.size(); ++i) col_rem[i] += v[i];
        }
    }
};

}  // namespace

WeightMatrix canonicalize_wm(const WeightMatrix& A) {
    check_canon_guards(A.rows(), A.cols());
    const std::size_t J = A.rows(), L = A.cols();

    std::vector<std::size_t> cp(L);
    std::iota(cp.begin(), cp.end(), 0);
    std::vector<std::vector<int>> best;
    do {
        std::vector<std::vector<int>> rows(J, std::vector<int>(L));
        for (std::size_t j = 0; j < J; ++j)
            for (std::size_t i = 0; i < L; ++i) rows[j][i] = A.at(j, cp[i]);
        // sorting the rows realizes the lex-minimal row order for this
        // column permutation
        std::sort(rows.begin(), rows.end());
        if (best.empty() || rows < best) best = std::move(rows);
    } while (std::next_permutation(cp.begin(), cp.end()));

    WeightMatrix C(J, L);
    for (std::size_t j = 0; j < J; ++j)
        for (std::size_t i = 0; i < L; ++i) C.set(j, i, best[j][i]);
    return C;
}

std::vector<WmClass> enumerate_wm(std::size_t J, std::size_t L, int col_sum,
                                  int row_sum, int max_entry) {
    check_canon_guards(J, L);
    if (col_sum < 0 || row_sum < 0 || max_entry < 0) return {};
    if (static_cast<std::uint64_t>(J) * row_sum !=
        static_cast<std::uint64_t>(L) * col_sum)
        return {};

    std::vector<std::vector<int>> rows;
    std::vector<int> cur;
    gen_rows(L, row_sum, max_entry, cur, rows);

    Enumerator en{J, max_entry, rows, std::vector<int>(L, col_sum), {}, {}};
    en.rec(0, 0);

    std::vector<WmClass> out;
    for (const auto& flat : en.seen) {
        WeightMatrix C(J, L);
        for (std::size_t j = 0; j < J; ++j)
            for (std::size_t i = 0; i < L; ++i) C.set(j, i, flat[j * L + i]);
        ExtInt b = L > J ? bound_eq2(C).value : ExtInt::infinity();
        out.push_back({std::move(C), b});
    }
    std::sort(out.begin(), out.end(), [](const WmClass& a, const WmClass& b) {
        if (a.bound != b.bound) return b.bound < a.bound;
        return a.canonical.flat() < b.canonical.flat();
    });
    return out;
}

}  // namespace qcldpc
