// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#include "qcldpc/qc_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qcldpc/errors.hpp"

namespace qcldpc {

namespace {

constexpr std::size_t kWordBits = 64;

bool all_equal(const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) ==
           v.end();
}

std::string_view strip_comment(std::string_view s) {
    auto pos = s.find('#');
    return pos == std::string_view::npos ? s : s.substr(0, pos);
}

std::vector<std::string_view> tokenize(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

std::uint32_t parse_uint(std::string_view tok, int line,
                         const char* what) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("bad ") + what + " '" +
                                   std::string(tok) + "'");
    return value;
}

std::uint32_t parse_header(std::string_view line_text, int line) {
    auto toks = tokenize(line_text);
    if (toks.size() != 2 || toks[0] != "r")
        throw ParseError(line, "expected header 'r <modulus>'");
    std::uint32_t r = parse_uint(toks[1], line, "modulus");
    if (r == 0) throw ParseError(line, "modulus must be positive");
    return r;
}

RingPoly parse_entry(std::string_view tok, std::uint32_t r, int line) {
    if (tok == "-") return RingPoly(r);
    std::vector<std::uint32_t> support;
    std::size_t i = 0;
    while (true) {
        auto comma = tok.find(',', i);
        auto piece = tok.substr(i, comma == std::string_view::npos
                                       ? std::string_view::npos
                                       : comma - i);
        if (piece.empty())
            throw ParseError(line, "bad entry '" + std::string(tok) + "'");
        std::uint32_t e = 0;
        auto [ptr, ec] =
            std::from_chars(piece.data(), piece.data() + piece.size(), e);
        if (ec != std::errc{} || ptr != piece.data() + piece.size())
            throw ParseError(line, "bad entry '" + std::string(tok) + "'");
        if (e >= r)
            throw ParseError(line, "exponent " + std::to_string(e) +
                                       " out of range for modulus " +
                                       std::to_string(r));
        if (!support.empty() && e <= support.back())
            throw ParseError(line,
                             "exponents must be strictly increasing in '" +
                                 std::string(tok) + "'");
        support.push_back(e);
        if (comma == std::string_view::npos) break;
        i = comma + 1;
    }
    return RingPoly::from_support(r, std::move(support));
}

}  // namespace

PolyMatrix::PolyMatrix(std::uint32_t r, std::size_t rows, std::size_t cols)
    : r_(r), rows_(rows), cols_(cols), cells_(rows * cols, RingPoly(r)) {
    if (rows == 0 || cols == 0) throw InputError("matrix must be non-empty");
}

const RingPoly& PolyMatrix::at(std::size_t j, std::size_t i) const {
    if (j >= rows_ || i >= cols_) throw InputError("matrix index out of range");
    return cells_[j * cols_ + i];
}

void PolyMatrix::set(std::size_t j, std::size_t i, RingPoly p) {
    if (j >= rows_ || i >= cols_) throw InputError("matrix index out of range");
    if (p.modulus() != r_) throw InputError("ring modulus mismatch");
    cells_[j * cols_ + i] = std::move(p);
}

WeightMatrix::WeightMatrix(std::size_t rows, std::size_t cols, int fill)
    : rows_(rows), cols_(cols), cells_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw InputError("matrix must be non-empty");
}

int WeightMatrix::at(std::size_t j, std::size_t i) const {
    if (j >= rows_ || i >= cols_) throw InputError("matrix index out of range");
    return cells_[j * cols_ + i];
}

void WeightMatrix::set(std::size_t j, std::size_t i, int v) {
    if (j >= rows_ || i >= cols_) throw InputError("matrix index out of range");
    cells_[j * cols_ + i] = v;
}

std::vector<int> WeightMatrix::row_sums() const {
    std::vector<int> out(rows_, 0);
    for (std::size_t j = 0; j < rows_; ++j)
        for (std::size_t i = 0; i < cols_; ++i) out[j] += cells_[j * cols_ + i];
    return out;
}

std::vector<int> WeightMatrix::col_sums() const {
    std::vector<int> out(cols_, 0);
    for (std::size_t j = 0; j < rows_; ++j)
        for (std::size_t i = 0; i < cols_; ++i) out[i] += cells_[j * cols_ + i];
    return out;
}

int WeightMatrix::max_entry() const {
    return *std::max_element(cells_.begin(), cells_.end());
}

ScalarMatrix::ScalarMatrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      wpr_((n_cols + kWordBits - 1) / kWordBits),
      words_(n_rows * wpr_, 0) {}

bool ScalarMatrix::get(std::size_t row, std::size_t col) const {
    return (words_[row * wpr_ + col / kWordBits] >> (col % kWordBits)) & 1u;
}

void ScalarMatrix::set(std::size_t row, std::size_t col, bool v) {
    std::uint64_t& w = words_[row * wpr_ + col / kWordBits];
    std::uint64_t mask = std::uint64_t{1} << (col % kWordBits);
    if (v)
        w |= mask;
    else
        w &= ~mask;
}

std::span<const std::uint64_t> ScalarMatrix::row(std::size_t r) const {
    return {words_.data() + r * wpr_, wpr_};
}

std::span<std::uint64_t> ScalarMatrix::row(std::size_t r) {
    return {words_.data() + r * wpr_, wpr_};
}

std::size_t ScalarMatrix::row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (std::uint64_t word : row(r)) w += std::popcount(word);
    return w;
}

std::size_t ScalarMatrix::col_weight(std::size_t c) const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < n_rows_; ++r) w += get(r, c);
    return w;
}

std::string ScalarMatrix::row_string(std::size_t r) const {
    std::string out(n_cols_, '0');
    for (std::size_t c = 0; c < n_cols_; ++c)
        if (get(r, c)) out[c] = '1';
    return out;
}

std::string ScalarMatrix::serialize() const {
    std::string out;
    out.reserve(n_rows_ * (n_cols_ + 1));
    for (std::size_t r = 0; r < n_rows_; ++r) {
        out += row_string(r);
        out += '\n';
    }
    return out;
}

BitVec::BitVec(std::size_t n)
    : n_bits(n), words((n + kWordBits - 1) / kWordBits, 0) {}

bool BitVec::get(std::size_t i) const {
    return (words[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVec::set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (v)
        words[i / kWordBits] |= mask;
    else
        words[i / kWordBits] &= ~mask;
}

void BitVec::xor_with(const BitVec& other) {
    if (n_bits != other.n_bits) throw InputError("bit vector length mismatch");
    for (std::size_t w = 0; w < words.size(); ++w) words[w] ^= other.words[w];
}

std::size_t BitVec::weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : words) w += std::popcount(word);
    return w;
}

bool BitVec::is_zero() const {
    return std::all_of(words.begin(), words.end(),
                       [](std::uint64_t w) { return w == 0; });
}

std::uint64_t polyvec_weight(const PolyVector& c) {
    std::uint64_t w = 0;
    for (const RingPoly& p : c) w += p.support().size();
    return w;
}

bool is_codeword(const PolyMatrix& H, const PolyVector& c) {
    if (c.size() != H.cols())
        throw InputError("codeword length does not match matrix columns");
    for (const RingPoly& p : c)
        if (p.modulus() != H.modulus())
            throw InputError("ring modulus mismatch in codeword");
    for (std::size_t j = 0; j < H.rows(); ++j) {
        RingPoly acc(H.modulus());
        for (std::size_t i = 0; i < H.cols(); ++i)
            acc = poly_add(acc, poly_mul(H.at(j, i), c[i]));
        if (!acc.is_zero()) return false;
    }
    return true;
}

PolyMatrix parse_matrix(std::istream& in) {
    int line_no = 0;
    std::string line;
    std::uint32_t r = 0;
    bool have_header = false;
    std::vector<std::vector<RingPoly>> rows;
    std::size_t n_cols = 0;

    while (std::getline(in, line)) {
        ++line_no;
        auto body = strip_comment(line);
        auto toks = tokenize(body);
        if (toks.empty()) continue;
        if (!have_header) {
            r = parse_header(body, line_no);
            have_header = true;
            continue;
        }
        std::vector<RingPoly> row;
        row.reserve(toks.size());
        for (auto tok : toks) row.push_back(parse_entry(tok, r, line_no));
        if (!rows.empty() && row.size() != n_cols)
            throw ParseError(line_no,
                             "row has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n_cols));
        n_cols = row.size();
        rows.push_back(std::move(row));
    }

    if (!have_header) throw ParseError(line_no + 1, "missing header 'r <modulus>'");
    if (rows.empty()) throw ParseError(line_no + 1, "no matrix rows");

    PolyMatrix H(r, rows.size(), n_cols);
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < n_cols; ++i)
            H.set(j, i, std::move(rows[j][i]));
    return H;
}

PolyMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_matrix(in);
}

PolyMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    return parse_matrix(in);
}

std::string serialize_matrix(const PolyMatrix& H) {
    std::ostringstream out;
    out << "r " << H.modulus() << '\n';
    for (std::size_t j = 0; j < H.rows(); ++j) {
        for (std::size_t i = 0; i < H.cols(); ++i) {
            if (i) out << ' ';
            out << H.at(j, i).str();
        }
        out << '\n';
    }
    return out.str();
}

WeightMatrix weight_matrix(const PolyMatrix& H) {
    WeightMatrix A(H.rows(), H.cols());
    for (std::size_t j = 0; j < H.rows(); ++j)
        for (std::size_t i = 0; i < H.cols(); ++i)
            A.set(j, i, poly_weight(H.at(j, i)));
    return A;
}

Classification classify(const PolyMatrix& H) {
    auto A = weight_matrix(H);
    Classification c;
    c.type_M = A.max_entry();
    auto rs = A.row_sums();
    auto cs = A.col_sums();
    if (all_equal(rs) && all_equal(cs)) c.regularity = {cs[0], rs[0]};
    return c;
}

ScalarMatrix expand_scalar(const PolyMatrix& H) {
    const std::uint32_t r = H.modulus();
    ScalarMatrix M(H.rows() * r, H.cols() * r);
    for (std::size_t j = 0; j < H.rows(); ++j)
        for (std::size_t i = 0; i < H.cols(); ++i)
            for (std::uint32_t s : H.at(j, i).support())
                for (std::uint32_t v = 0; v < r; ++v) {
                    std::uint32_t u = v + s >= r ? v + s - r : v + s;
                    M.set(j * r + u, i * r + v);
                }
    return M;
}

PolyMatrix submatrix(const PolyMatrix& H,
                     std::span<const std::size_t> row_set,
                     std::span<const std::size_t> col_set) {
    if (row_set.empty() || col_set.empty())
        throw InputError("submatrix selection must be non-empty");
    PolyMatrix B(H.modulus(), row_set.size(), col_set.size());
    for (std::size_t j = 0; j < row_set.size(); ++j)
        for (std::size_t i = 0; i < col_set.size(); ++i)
            B.set(j, i, H.at(row_set[j], col_set[i]));
    return B;
}

PolyMatrix submatrix_drop(const PolyMatrix& H,
                          std::span<const std::size_t> col_set,
                          std::size_t dropped) {
    std::vector<std::size_t> cols;
    cols.reserve(col_set.size());
    for (std::size_t c : col_set)
        if (c != dropped) cols.push_back(c);
    std::vector<std::size_t> all_rows(H.rows());
    for (std::size_t j = 0; j < H.rows(); ++j) all_rows[j] = j;
    return submatrix(H, all_rows, cols);
}

}  // namespace qcldpc
