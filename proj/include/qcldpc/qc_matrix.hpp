// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcldpc/ring_poly.hpp"

namespace qcldpc {

// J x L matrix over F2[x]/(x^r - 1). The code it defines has length n = L*r.
class PolyMatrix {
public:
    PolyMatrix(std::uint32_t r, std::size_t rows, std::size_t cols);

    std::uint32_t modulus() const { return r_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t length() const { return cols_ * r_; }

    const RingPoly& at(std::size_t j, std::size_t i) const;
    void set(std::size_t j, std::size_t i, RingPoly p);

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::uint32_t r_;
    std::size_t rows_, cols_;
    std::vector<RingPoly> cells_;
};

// J x L grid of non-negative integers: entrywise weights of a PolyMatrix,
// equally the incidence matrix of the proto-graph.
class WeightMatrix {
public:
    WeightMatrix(std::size_t rows, std::size_t cols, int fill = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int at(std::size_t j, std::size_t i) const;
    void set(std::size_t j, std::size_t i, int v);

    std::vector<int> row_sums() const;
    std::vector<int> col_sums() const;
    int max_entry() const;

    // Row-major entry sequence; the ordering key used for canonical forms.
    const std::vector<int>& flat() const { return cells_; }

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<int> cells_;
};

// Dense GF(2) matrix with bit-packed rows (64 columns per word).
class ScalarMatrix {
public:
    ScalarMatrix(std::size_t n_rows, std::size_t n_cols);

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return n_cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, bool v = true);

    std::span<const std::uint64_t> row(std::size_t r) const;
    std::span<std::uint64_t> row(std::size_t r);

    std::size_t row_weight(std::size_t r) const;
    std::size_t col_weight(std::size_t c) const;

    // "0"/"1" characters, one row per line in serialize().
    std::string row_string(std::size_t r) const;
    std::string serialize() const;

    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

private:
    std::size_t n_rows_, n_cols_, wpr_;
    std::vector<std::uint64_t> words_;
};

// One GF(2) row vector, bit-packed; codewords and nullspace elements.
struct BitVec {
    std::size_t n_bits = 0;
    std::vector<std::uint64_t> words;

    explicit BitVec(std::size_t n = 0);

    bool get(std::size_t i) const;
    void set(std::size_t i, bool v = true);
    void xor_with(const BitVec& other);
    std::size_t weight() const;
    bool is_zero() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;
};

// Length-L vector over the ring, one polynomial per block position.
using PolyVector = std::vector<RingPoly>;

// Sum of entry weights, i.e. the Hamming weight of the scalar image.
std::uint64_t polyvec_weight(const PolyVector& c);

// True when H c^T = 0 in the ring (c as a column of polynomials).
bool is_codeword(const PolyMatrix& H, const PolyVector& c);

struct Classification {
    int type_M = 0;  // max entry of the weight matrix
    // (column degree J', row degree L') when all column sums agree and all
    // row sums agree; absent for irregular matrices.
    std::optional<std::pair<int, int>> regularity;
};

// QCPM text format:
//   line 1: "r <positive integer>"
//   then one line per matrix row, entries separated by whitespace,
//   entry := "-" | "e1[,e2,...]" with 0 <= e1 < e2 < ... < r.
// "#" starts a comment; blank lines are ignored.
PolyMatrix parse_matrix(std::string_view text);
PolyMatrix parse_matrix(std::istream& in);
PolyMatrix parse_matrix_file(const std::string& path);
std::string serialize_matrix(const PolyMatrix& H);

WeightMatrix weight_matrix(const PolyMatrix& H);
Classification classify(const PolyMatrix& H);

// Circulant expansion to the Jr x Lr scalar matrix. Block (j,i) has bit
// (u,v) = 1 iff (u - v) mod r is in the support of the entry; this matches
// the convention that x^s expands to the s-times left-shifted identity.
ScalarMatrix expand_scalar(const PolyMatrix& H);

PolyMatrix submatrix(const PolyMatrix& H,
                     std::span<const std::size_t> row_set,
                     std::span<const std::size_t> col_set);

// Columns S \ {i} keeping ascending order; the matrix carved out of H when
// one column of a chosen subset is dropped.
PolyMatrix submatrix_drop(const PolyMatrix& H,
                          std::span<const std::size_t> col_set,
                          std::size_t dropped);

}  // namespace qcldpc
