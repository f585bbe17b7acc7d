// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#include "qcldpc/distance.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

#include "qcldpc/errors.hpp"

namespace qcldpc {

namespace {

constexpr std::uint64_t kProgressStep = std::uint64_t{1} << 24;
constexpr std::uint64_t kWorkerChunk = std::uint64_t{1} << 20;

std::vector<std::vector<std::uint64_t>> packed_rows(const ScalarMatrix& M) {
    std::vector<std::vector<std::uint64_t>> rows(M.n_rows());
    for (std::size_t r = 0; r < M.n_rows(); ++r) {
        auto span = M.row(r);
        rows[r].assign(span.begin(), span.end());
    }
    return rows;
}

bool bit_of(const std::vector<std::uint64_t>& row, std::size_t c) {
    return (row[c / 64] >> (c % 64)) & 1u;
}

void xor_into(std::vector<std::uint64_t>& dst,
              const std::vector<std::uint64_t>& src) {
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

// Falls back to +inf when the cofactor construction is not applicable or
// produces nothing nonzero.
ExtInt cofactor_upper(const PolyMatrix& H) {
    if (H.cols() < H.rows() + 1) return ExtInt::infinity();
    return dmin_upper_witness(H).weight;
}

}  // namespace

std::size_t gf2_rank(const ScalarMatrix& M) {
    auto rows = packed_rows(M);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < M.n_cols() && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !bit_of(rows[pivot], c)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = pivot + 1; r < rows.size(); ++r)
            if (bit_of(rows[r], c)) xor_into(rows[r], rows[rank]);
        ++rank;
    }
    return rank;
}

std::vector<BitVec> nullspace_basis(const ScalarMatrix& M) {
    const std::size_t n = M.n_cols();
    auto rows = packed_rows(M);
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !bit_of(rows[pivot], c)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && bit_of(rows[r], c)) xor_into(rows[r], rows[rank]);
        pivot_col.push_back(c);
        ++rank;
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(n);
        v.set(f);
        for (std::size_t p = 0; p < rank; ++p)
            if (bit_of(rows[p], f)) v.set(pivot_col[p]);
        basis.push_back(std::move(v));
    }
    return basis;
}

CodeParams dmin_exhaustive(const PolyMatrix& H, std::size_t max_dim,
                           std::size_t jobs, const DminProgress& progress) {
    auto Hs = expand_scalar(H);
    auto basis = nullspace_basis(Hs);

    CodeParams p;
    p.n = Hs.n_cols();
    p.k = basis.size();

    if (p.k == 0) {
        p.dmin_status = DminStatus::exact;
        return p;
    }
    if (p.k > max_dim) {
        p.dmin_status = DminStatus::capped;
        p.dmin_upper = cofactor_upper(H);
        return p;
    }

    const std::uint64_t total = std::uint64_t{1} << p.k;
    std::atomic<bool> cancel{false};
    if (progress && !progress(0, total)) cancel = true;

    std::uint64_t best = UINT64_MAX;
    if (!cancel) {
        if (jobs == 0) {
            jobs = std::thread::hardware_concurrency();
            if (jobs == 0) jobs = 1;
        }
        jobs = std::min<std::size_t>(jobs, std::max<std::uint64_t>(total / 2, 1));

        std::atomic<std::uint64_t> done{0};
        std::atomic<std::size_t> live{jobs};
        std::mutex best_mu;

        auto worker = [&](std::uint64_t begin, std::uint64_t end) {
            std::uint64_t local_best = UINT64_MAX;
            if (begin < end) {
                BitVec state(Hs.n_cols());
                const std::uint64_t g = begin ^ (begin >> 1);
                for (std::size_t j = 0; j < p.k; ++j)
                    if ((g >> j) & 1) state.xor_with(basis[j]);
                std::uint64_t i = begin;
                while (i < end && !cancel.load(std::memory_order_relaxed)) {
                    const std::uint64_t stop = std::min(end, i + kWorkerChunk);
                    const std::uint64_t from = i;
                    for (; i < stop; ++i) {
                        if (i) {
                            const std::uint64_t w = state.weight();
                            if (w < local_best) local_best = w;
                        }
                        if (i + 1 < total)
                            state.xor_with(basis[std::countr_zero(i + 1)]);
                    }
                    done.fetch_add(i - from, std::memory_order_relaxed);
                }
            }
            {
                std::lock_guard<std::mutex> lk(best_mu);
                if (local_best < best) best = local_best;
            }
            live.fetch_sub(1);
        };

        std::vector<std::thread> pool;
        const std::uint64_t per = total / jobs;
        std::uint64_t begin = 0;
        for (std::size_t t = 0; t < jobs; ++t) {
            const std::uint64_t end = t + 1 == jobs ? total : begin + per;
            pool.emplace_back(worker, begin, end);
            begin = end;
        }

        if (progress) {
            std::uint64_t next = kProgressStep;
            while (live.load() > 0) {
                std::this_thread::sleep_for(std::chrono::milliseconds(2));
                const std::uint64_t d = done.load(std::memory_order_relaxed);
                if (d >= next && !cancel) {
                    if (!progress(d, total)) cancel = true;
                    next = (d / kProgressStep + 1) * kProgressStep;
                }
            }
        }
        for (auto& th : pool) th.join();
    }

    if (cancel) {
        p.dmin_status = DminStatus::upper_only;
        ExtInt seen =
            best == UINT64_MAX ? ExtInt::infinity() : ExtInt::of(best);
        ExtInt cof = cofactor_upper(H);
        p.dmin_upper = seen < cof ? seen : cof;
        return p;
    }

    p.dmin_status = DminStatus::exact;
    p.dmin = best;
    p.dmin_upper = ExtInt::of(best);
    return p;
}

DminUpperWitness dmin_upper_witness(const PolyMatrix& H) {
    auto rep = bound_eq1(H);
    DminUpperWitness w;
    w.weight = rep.value;
    w.witness = std::move(rep.witness);
    return w;
}

}  // namespace qcldpc
