// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#include "qcldpc/covers.hpp"

#include <algorithm>

#include "qcldpc/cycles.hpp"
#include "qcldpc/errors.hpp"

namespace qcldpc {

CoverSplit split_auto(const PolyMatrix& H) {
    PolyMatrix p1(H.modulus(), H.rows(), H.cols());
    PolyMatrix p2(H.modulus(), H.rows(), H.cols());
    for (std::size_t j = 0; j < H.rows(); ++j)
        for (std::size_t i = 0; i < H.cols(); ++i) {
            const auto& s = H.at(j, i).support();
            switch (s.size()) {
                case 0:
                    break;
                case 1:
                    p1.set(j, i, H.at(j, i));
                    break;
                case 2:
                    p1.set(j, i, RingPoly::monomial(H.modulus(), s[0]));
                    p2.set(j, i, RingPoly::monomial(H.modulus(), s[1]));
                    break;
                default:
                    throw InputError(
                        "entry of weight " + std::to_string(s.size()) +
                        " needs an explicit split");
            }
        }
    return {std::move(p1), std::move(p2)};
}

CoverSplit parse_split(const PolyMatrix& H, const PolyMatrix& part1) {
    if (part1.rows() != H.rows() || part1.cols() != H.cols())
        throw InputError("split shape does not match the matrix");
    if (part1.modulus() != H.modulus())
        throw InputError("split modulus does not match the matrix");
    PolyMatrix p2(H.modulus(), H.rows(), H.cols());
    for (std::size_t j = 0; j < H.rows(); ++j)
        for (std::size_t i = 0; i < H.cols(); ++i) {
            for (std::uint32_t e : part1.at(j, i).support())
                if (!H.at(j, i).contains(e))
                    throw InputError(
                        "split entry at (" + std::to_string(j) + "," +
                        std::to_string(i) + ") is not a subset");
            p2.set(j, i, poly_add(H.at(j, i), part1.at(j, i)));
        }
    return {part1, std::move(p2)};
}

PolyMatrix build_cover_block(const CoverSplit& s) {
    const std::size_t J = s.part1.rows(), L = s.part1.cols();
    PolyMatrix C(s.part1.modulus(), 2 * J, 2 * L);
    for (std::size_t j = 0; j < J; ++j)
        for (std::size_t i = 0; i < L; ++i) {
            C.set(j, i, s.part1.at(j, i));
            C.set(j, i + L, s.part2.at(j, i));
            C.set(j + J, i, s.part2.at(j, i));
            C.set(j + J, i + L, s.part1.at(j, i));
        }
    return C;
}

PolyMatrix build_cover_interleaved(const CoverSplit& s) {
    const std::size_t J = s.part1.rows(), L = s.part1.cols();
    PolyMatrix C(s.part1.modulus(), 2 * J, 2 * L);
    for (std::size_t j = 0; j < J; ++j)
        for (std::size_t i = 0; i < L; ++i)
            for (std::size_t p = 0; p < 2; ++p)
                for (std::size_t q = 0; q < 2; ++q)
                    C.set(2 * j + p, 2 * i + q,
                          p == q ? s.part1.at(j, i) : s.part2.at(j, i));

    // shuffle consistency with the block form
    auto B = build_cover_block(s);
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t j = 0; j < J; ++j)
            for (std::size_t q = 0; q < 2; ++q)
                for (std::size_t i = 0; i < L; ++i)
                    if (C.at(2 * j + p, 2 * i + q) != B.at(p * J + j, q * L + i))
                        throw InternalError("cover layouts disagree");
    return C;
}

namespace {

// Local bijectivity of a vertex map between Tanner graphs: the mapped
// neighborhood of every vertex must be exactly the neighborhood of the image.
template <typename MapVar, typename MapChk>
bool locally_bijective(const TannerGraph& cover, const TannerGraph& base,
                       MapVar map_var, MapChk map_chk) {
    std::vector<std::uint32_t> mapped;
    for (std::size_t c = 0; c < cover.n_chk; ++c) {
        mapped.clear();
        for (std::uint32_t v : cover.chk_adj[c]) mapped.push_back(map_var(v));
        std::sort(mapped.begin(), mapped.end());
        if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end())
            return false;
        if (mapped != base.chk_adj[map_chk(static_cast<std::uint32_t>(c))])
            return false;
    }
    for (std::size_t v = 0; v < cover.n_var; ++v) {
        mapped.clear();
        for (std::uint32_t c : cover.var_adj[v]) mapped.push_back(map_chk(c));
        std::sort(mapped.begin(), mapped.end());
        if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end())
            return false;
        if (mapped != base.var_adj[map_var(static_cast<std::uint32_t>(v))])
            return false;
    }
    return true;
}

}  // namespace

bool verify_cover_projection(const PolyMatrix& cover, const PolyMatrix& base) {
    if (cover.modulus() != base.modulus())
        throw InputError("cover and base use different moduli");
    if (cover.rows() != 2 * base.rows() || cover.cols() != 2 * base.cols())
        throw InputError("cover shape is not the double of the base");

    const std::uint32_t r = base.modulus();
    const std::size_t L = base.cols(), J = base.rows();
    auto gc = build_tanner(expand_scalar(cover));
    auto gb = build_tanner(expand_scalar(base));

    // block layout: scalar ids repeat the base ids with period base count
    auto block_var = [&](std::uint32_t v) {
        return static_cast<std::uint32_t>(v % (L * r));
    };
    auto block_chk = [&](std::uint32_t c) {
        return static_cast<std::uint32_t>(c % (J * r));
    };
    if (locally_bijective(gc, gb, block_var, block_chk)) return true;

    // interleaved layout: consecutive block pairs share one base position
    auto inter_var = [&](std::uint32_t v) {
        return static_cast<std::uint32_t>((v / r / 2) * r + v % r);
    };
    auto inter_chk = [&](std::uint32_t c) {
        return static_cast<std::uint32_t>((c / r / 2) * r + c % r);
    };
    return locally_bijective(gc, gb, inter_var, inter_chk);
}

std::pair<std::uint64_t, std::uint64_t> cover_distance_bounds(
    std::uint64_t base_dmin) {
    if (base_dmin == 0) throw InputError("distance must be positive");
    return {base_dmin, 2 * base_dmin};
}

}  // namespace qcldpc
