// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#include "qcldpc/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "qcldpc/errors.hpp"

namespace qcldpc {

namespace {

void require_weight_at_most(const PolyMatrix& H, int cap, const char* what) {
    if (weight_matrix(H).max_entry() > cap)
        throw InputError(std::string(what) + " requires entry weights <= " +
                         std::to_string(cap));
}

// Ascending k-subset odometer over {0, .., n-1}; false after the last one.
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

std::uint64_t assignment_sum(const PolyMatrix& H,
                             const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
    std::uint64_t sum = 0;
    for (std::size_t t = 0; t < rows.size(); ++t)
        sum += H.at(rows[t], cols[t]).support()[0];
    return sum;
}

bool assignment_nonzero(const PolyMatrix& H,
                        const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    for (std::size_t t = 0; t < rows.size(); ++t)
        if (H.at(rows[t], cols[t]).is_zero()) return false;
    return true;
}

bool is_single_cycle(const std::vector<std::size_t>& sigma,
                     const std::vector<std::size_t>& tau) {
    const std::size_t R = sigma.size();
    // pi(t) = position of tau[t] within sigma
    std::vector<std::size_t> pi(R);
    for (std::size_t t = 0; t < R; ++t)
        for (std::size_t s = 0; s < R; ++s)
            if (sigma[s] == tau[t]) pi[t] = s;
    std::size_t t = 0, steps = 0;
    do {
        t = pi[t];
        ++steps;
    } while (t != 0 && steps <= R);
    return steps == R;
}

std::string sum_equation(const PolyMatrix& H,
                         const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& sigma,
                         const std::vector<std::size_t>& tau) {
    std::ostringstream out;
    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (t) out << " + ";
        out << H.at(rows[t], sigma[t]).support()[0];
    }
    out << " = ";
    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (t) out << " + ";
        out << H.at(rows[t], tau[t]).support()[0];
    }
    out << " (mod " << H.modulus() << ")";
    return out.str();
}

CycleWitness make_witness(const PolyMatrix& H,
                          const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols,
                          const std::vector<std::size_t>& sigma,
                          const std::vector<std::size_t>& tau) {
    CycleWitness w;
    w.R = rows.size();
    w.row_set = rows;
    w.col_set = cols;
    w.sigma = sigma;
    w.tau = tau;
    w.pi_single_cycle = is_single_cycle(sigma, tau);
    w.equation = sum_equation(H, rows, sigma, tau);
    return w;
}

// Exhaustive scan for two assignments with equal exponent sums on some
// R x R selection. require_derangement restricts to pairs differing at
// every position; otherwise any differing pair counts and the caller
// classifies the overlap.
std::optional<CycleWitness> collision_scan(const PolyMatrix& H, std::size_t R,
                                           bool require_derangement) {
    const std::uint32_t r = H.modulus();
    auto rows = first_subset(R);
    do {
        auto cols = first_subset(R);
        do {
            std::vector<std::vector<std::size_t>> assigns;
            std::vector<std::uint64_t> sums;
            std::vector<std::size_t> perm = cols;
            do {
                if (!assignment_nonzero(H, rows, perm)) continue;
                assigns.push_back(perm);
                sums.push_back(assignment_sum(H, rows, perm) % r);
            } while (std::next_permutation(perm.begin(), perm.end()));
            for (std::size_t a = 0; a < assigns.size(); ++a)
                for (std::size_t b = a + 1; b < assigns.size(); ++b) {
                    if (sums[a] != sums[b]) continue;
                    if (require_derangement) {
                        bool everywhere = true;
                        for (std::size_t t = 0; t < R && everywhere; ++t)
                            everywhere = assigns[a][t] != assigns[b][t];
                        if (!everywhere) continue;
                    }
                    return make_witness(H, rows, cols, assigns[a], assigns[b]);
                }
        } while (next_subset(cols, H.cols()));
    } while (next_subset(rows, H.rows()));
    return std::nullopt;
}

// Shrinks a transposition collision inside a 3x3 scan down to the moved
// 2x2 selection.
CycleWitness restrict_to_moved(const PolyMatrix& H, const CycleWitness& w) {
    std::vector<std::size_t> moved;
    for (std::size_t t = 0; t < w.R; ++t)
        if (w.sigma[t] != w.tau[t]) moved.push_back(t);
    std::vector<std::size_t> rows, sigma, tau;
    for (std::size_t t : moved) {
        rows.push_back(w.row_set[t]);
        sigma.push_back(w.sigma[t]);
        tau.push_back(w.tau[t]);
    }
    std::vector<std::size_t> cols = sigma;
    std::sort(cols.begin(), cols.end());
    return make_witness(H, rows, cols, sigma, tau);
}

}  // namespace

std::size_t TannerGraph::edge_count() const {
    std::size_t e = 0;
    for (const auto& adj : chk_adj) e += adj.size();
    return e;
}

TannerGraph build_tanner(const ScalarMatrix& Hs) {
    TannerGraph g;
    g.n_var = Hs.n_cols();
    g.n_chk = Hs.n_rows();
    g.chk_adj.resize(g.n_chk);
    g.var_adj.resize(g.n_var);
    for (std::size_t u = 0; u < g.n_chk; ++u)
        for (std::size_t v = 0; v < g.n_var; ++v)
            if (Hs.get(u, v)) {
                g.chk_adj[u].push_back(static_cast<std::uint32_t>(v));
                g.var_adj[v].push_back(static_cast<std::uint32_t>(u));
            }
    return g;
}

namespace {

// Variables first, checks after: one flat adjacency list for traversals.
std::vector<std::vector<std::uint32_t>> flat_adjacency(const TannerGraph& g) {
    std::vector<std::vector<std::uint32_t>> adj(g.vertex_count());
    for (std::size_t v = 0; v < g.n_var; ++v) {
        adj[v].reserve(g.var_adj[v].size());
        for (std::uint32_t c : g.var_adj[v])
            adj[v].push_back(static_cast<std::uint32_t>(g.n_var + c));
    }
    for (std::size_t c = 0; c < g.n_chk; ++c)
        adj[g.n_var + c] = {g.chk_adj[c].begin(), g.chk_adj[c].end()};
    return adj;
}

}  // namespace

ExtInt girth(const TannerGraph& g) {
    const auto adj = flat_adjacency(g);
    const std::size_t V = adj.size();
    std::size_t best = SIZE_MAX;
    std::vector<std::int32_t> dist(V), parent(V);
    std::vector<std::uint32_t> queue;
    for (std::size_t root = 0; root < V; ++root) {
        // bipartite and simple: nothing shorter than a 4-cycle exists
        if (best == 4) break;
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        queue.clear();
        queue.push_back(static_cast<std::uint32_t>(root));
        dist[root] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t x = queue[head];
            for (std::uint32_t u : adj[x]) {
                if (dist[u] < 0) {
                    dist[u] = dist[x] + 1;
                    parent[u] = static_cast<std::int32_t>(x);
                    if (2 * static_cast<std::size_t>(dist[u]) < best)
                        queue.push_back(u);
                } else if (parent[x] != static_cast<std::int32_t>(u)) {
                    const std::size_t len =
                        static_cast<std::size_t>(dist[x]) + dist[u] + 1;
                    best = std::min(best, len);
                }
            }
        }
    }
    return best == SIZE_MAX ? ExtInt::infinity() : ExtInt::of(best);
}

ExtInt diameter(const TannerGraph& g) {
    const auto adj = flat_adjacency(g);
    const std::size_t V = adj.size();
    if (V <= 1) return ExtInt::of(0);
    std::size_t best = 0;
    std::vector<std::int32_t> dist(V);
    std::vector<std::uint32_t> queue;
    for (std::size_t root = 0; root < V; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(static_cast<std::uint32_t>(root));
        dist[root] = 0;
        std::size_t seen = 1;
        std::int32_t ecc = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t x = queue[head];
            for (std::uint32_t u : adj[x])
                if (dist[u] < 0) {
                    dist[u] = dist[x] + 1;
                    ecc = dist[u];
                    ++seen;
                    queue.push_back(u);
                }
        }
        if (seen < V) return ExtInt::infinity();
        best = std::max(best, static_cast<std::size_t>(ecc));
    }
    return ExtInt::of(best);
}

std::optional<CycleWitness> detect_4cycle_type1(const PolyMatrix& H) {
    require_weight_at_most(H, 1, "4-cycle scan");
    if (H.rows() < 2 || H.cols() < 2) return std::nullopt;
    return collision_scan(H, 2, true);
}

std::optional<CycleWitness> detect_6cycle_type1(const PolyMatrix& H) {
    require_weight_at_most(H, 1, "6-cycle scan");
    if (H.rows() < 3 || H.cols() < 3) return std::nullopt;
    auto w = collision_scan(H, 3, false);
    if (!w) return std::nullopt;
    std::size_t moved = 0;
    for (std::size_t t = 0; t < w->R; ++t)
        if (w->sigma[t] != w->tau[t]) ++moved;
    if (moved == 2) return restrict_to_moved(H, *w);
    return w;
}

std::optional<CycleWitness> equal_products(const PolyMatrix& H, std::size_t R) {
    require_weight_at_most(H, 1, "equal-products search");
    if (R < 2 || R > std::min(H.rows(), H.cols()))
        throw InputError("order " + std::to_string(R) +
                         " out of range for a " + std::to_string(H.rows()) +
                         "x" + std::to_string(H.cols()) + " matrix");
    if (R > kEqualProductsGuard)
        throw LimitError("order " + std::to_string(R) +
                         " exceeds equal-products guard " +
                         std::to_string(kEqualProductsGuard));
    return collision_scan(H, R, true);
}

ExtInt wm_girth_caps(const WeightMatrix& A) {
    const std::size_t J = A.rows(), L = A.cols();
    ExtInt cap = ExtInt::infinity();
    auto tighten = [&cap](std::uint64_t v) {
        if (ExtInt::of(v) < cap) cap = ExtInt::of(v);
    };

    for (std::size_t j = 0; j < J; ++j)
        for (std::size_t i = 0; i < L; ++i)
            if (A.at(j, i) >= 3) tighten(6);

    // two entries >= 2 in one line, either orientation
    for (std::size_t j = 0; j < J; ++j) {
        int heavy = 0;
        for (std::size_t i = 0; i < L; ++i) heavy += A.at(j, i) >= 2;
        if (heavy >= 2) tighten(8);
    }
    for (std::size_t i = 0; i < L; ++i) {
        int heavy = 0;
        for (std::size_t j = 0; j < J; ++j) heavy += A.at(j, i) >= 2;
        if (heavy >= 2) tighten(8);
    }

    // all-nonzero 2x2 selections: one entry >= 2 caps at 10, and any pair
    // of rows (or columns) agreeing on >= 3 nonzero positions caps at 12
    for (std::size_t j1 = 0; j1 < J; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < J; ++j2) {
            std::size_t shared = 0;
            for (std::size_t i1 = 0; i1 < L; ++i1) {
                if (A.at(j1, i1) < 1 || A.at(j2, i1) < 1) continue;
                ++shared;
                for (std::size_t i2 = i1 + 1; i2 < L; ++i2) {
                    if (A.at(j1, i2) < 1 || A.at(j2, i2) < 1) continue;
                    const int mx =
                        std::max(std::max(A.at(j1, i1), A.at(j1, i2)),
                                 std::max(A.at(j2, i1), A.at(j2, i2)));
                    if (mx >= 2) tighten(10);
                }
            }
            if (shared >= 3) tighten(12);
        }
    for (std::size_t i1 = 0; i1 < L; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < L; ++i2) {
            std::size_t shared = 0;
            for (std::size_t j = 0; j < J; ++j)
                if (A.at(j, i1) >= 1 && A.at(j, i2) >= 1) ++shared;
            if (shared >= 3) tighten(12);
        }
    return cap;
}

namespace {

void scan_condition_1(const PolyMatrix& H, std::vector<FourCycleViolation>& out) {
    const std::uint32_t r = H.modulus();
    if (r % 2 != 0) return;
    for (std::size_t j = 0; j < H.rows(); ++j)
        for (std::size_t i = 0; i < H.cols(); ++i) {
            const auto& s = H.at(j, i).support();
            if (s.size() != 2) continue;
            const std::uint32_t d = s[1] - s[0];
            if (std::gcd(d, r) == r / 2)
                out.push_back({1,
                               {j},
                               {i},
                               "exponent gap " + std::to_string(d) +
                                   " has gcd r/2 with the modulus"});
        }
}

void scan_pair_products(const PolyMatrix& H, bool by_row,
                        std::vector<FourCycleViolation>& out) {
    const std::size_t outer = by_row ? H.rows() : H.cols();
    const std::size_t inner = by_row ? H.cols() : H.rows();
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t a = 0; a < inner; ++a)
            for (std::size_t b = a + 1; b < inner; ++b) {
                const RingPoly& p = by_row ? H.at(o, a) : H.at(a, o);
                const RingPoly& q = by_row ? H.at(o, b) : H.at(b, o);
                if (poly_weight(p) != 2 || poly_weight(q) != 2) continue;
                const int w = poly_weight(poly_mul(p, q));
                if (w == 4) continue;
                FourCycleViolation v;
                v.condition = by_row ? 2 : 3;
                v.row_set = by_row ? std::vector<std::size_t>{o}
                                   : std::vector<std::size_t>{a, b};
                v.col_set = by_row ? std::vector<std::size_t>{a, b}
                                   : std::vector<std::size_t>{o};
                v.detail = "pair product has weight " + std::to_string(w);
                out.push_back(std::move(v));
            }
}

void scan_cross_terms(const PolyMatrix& H, std::vector<FourCycleViolation>& out) {
    const std::uint32_t r = H.modulus();
    for (std::size_t j1 = 0; j1 < H.rows(); ++j1)
        for (std::size_t j2 = j1 + 1; j2 < H.rows(); ++j2)
            for (std::size_t i1 = 0; i1 < H.cols(); ++i1)
                for (std::size_t i2 = i1 + 1; i2 < H.cols(); ++i2) {
                    const RingPoly& p = H.at(j1, i1);
                    const RingPoly& q = H.at(j1, i2);
                    const RingPoly& s = H.at(j2, i1);
                    const RingPoly& t = H.at(j2, i2);
                    if (p.is_zero() || q.is_zero() || s.is_zero() ||
                        t.is_zero())
                        continue;
                    const int wp = poly_weight(p), wq = poly_weight(q);
                    const int ws = poly_weight(s), wt = poly_weight(t);
                    const bool diag_pattern =
                        (wp == 1 && wt == 1 && wq == 2 && ws == 2) ||
                        (wp == 2 && wt == 2 && wq == 1 && ws == 1);
                    std::optional<std::uint64_t> hit;
                    for (std::uint32_t ep : p.support())
                        for (std::uint32_t et : t.support())
                            for (std::uint32_t eq : q.support())
                                for (std::uint32_t es : s.support())
                                    if ((std::uint64_t{ep} + et) % r ==
                                        (std::uint64_t{eq} + es) % r)
                                        if (!hit)
                                            hit = (std::uint64_t{ep} + et) % r;
                    if (!hit) continue;
                    FourCycleViolation v;
                    v.condition = diag_pattern ? 4 : 5;
                    v.row_set = {j1, j2};
                    v.col_set = {i1, i2};
                    v.detail = "exponent sum " + std::to_string(*hit) +
                               " appears on both diagonals";
                    out.push_back(std::move(v));
                }
}

}  // namespace

FourCycleFreeResult type2_4cycle_free(const PolyMatrix& H) {
    require_weight_at_most(H, 2, "4-cycle freeness test");
    FourCycleFreeResult res;
    scan_condition_1(H, res.violations);
    scan_pair_products(H, true, res.violations);
    scan_pair_products(H, false, res.violations);
    scan_cross_terms(H, res.violations);
    res.pass = res.violations.empty();
    return res;
}

}  // namespace qcldpc
