// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>

#include "qcldpc/qc_matrix.hpp"

namespace qcldpc {

// Entrywise decomposition H = part1 + part2 with disjoint supports, so no
// terms cancel when the parts are recombined.
struct CoverSplit {
    PolyMatrix part1;
    PolyMatrix part2;
};

// Deterministic split for matrices of type <= 2: a binomial x^a + x^b with
// a < b becomes (x^a | x^b), a monomial (x^a | 0), zero (0 | 0). Entries of
// weight >= 3 need an explicit split (see parse_split).
CoverSplit split_auto(const PolyMatrix& H);

// Manual split: part1 is given in the same grid format as the matrix itself
// and must be an entrywise subset of H; part2 is the complement.
CoverSplit parse_split(const PolyMatrix& H, const PolyMatrix& part1);

// 2J x 2L double cover in block layout [[part1, part2], [part2, part1]].
PolyMatrix build_cover_block(const CoverSplit& s);

// Same cover with each entry (j,i) expanded in place to the 2x2 block
// [[h1, h2], [h2, h1]]. Equal to the block form up to the perfect-shuffle
// permutation i -> 2i, 2i+1 on rows and columns (checked internally).
PolyMatrix build_cover_interleaved(const CoverSplit& s);

// Checks the double-cover condition on the expanded Tanner graphs: the map
// sending cover vertex v to v mod (base count) in its class is a graph
// homomorphism that is bijective on every neighborhood. Both the block and
// the interleaved vertex layouts are tried; true if either projects.
bool verify_cover_projection(const PolyMatrix& cover, const PolyMatrix& base);

// dmin(C) <= dmin(cover code) <= 2 dmin(C).
std::pair<std::uint64_t, std::uint64_t> cover_distance_bounds(std::uint64_t base_dmin);

}  // namespace qcldpc
