// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#include "qcldpc/ring_poly.hpp"

#include <algorithm>
#include <sstream>

namespace qcldpc {

namespace {

void require_same_ring(const RingPoly& a, const RingPoly& b) {
    if (a.modulus() != b.modulus())
        throw InputError("ring modulus mismatch: " + std::to_string(a.modulus()) +
                         " vs " + std::to_string(b.modulus()));
}

}  // namespace

RingPoly::RingPoly(std::uint32_t r) : r_(r) {
    if (r == 0) throw InputError("ring modulus must be positive");
}

RingPoly RingPoly::monomial(std::uint32_t r, std::uint32_t exponent) {
    RingPoly p(r);
    if (exponent >= r)
        throw InputError("exponent " + std::to_string(exponent) +
                         " out of range for modulus " + std::to_string(r));
    p.support_.push_back(exponent);
    return p;
}

RingPoly RingPoly::from_support(std::uint32_t r,
                                std::vector<std::uint32_t> exponents) {
    RingPoly p(r);
    std::sort(exponents.begin(), exponents.end());
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] >= r)
            throw InputError("exponent " + std::to_string(exponents[i]) +
                             " out of range for modulus " + std::to_string(r));
        if (i > 0 && exponents[i] == exponents[i - 1])
            throw InputError("duplicate exponent " +
                             std::to_string(exponents[i]));
    }
    p.support_ = std::move(exponents);
    return p;
}

bool RingPoly::contains(std::uint32_t exponent) const {
    return std::binary_search(support_.begin(), support_.end(), exponent);
}

std::string RingPoly::str() const {
    if (support_.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (i) out << ',';
        out << support_[i];
    }
    return out.str();
}

RingPoly poly_add(const RingPoly& a, const RingPoly& b) {
    require_same_ring(a, b);
    // characteristic 2: common exponents cancel
    std::vector<std::uint32_t> out;
    std::set_symmetric_difference(a.support().begin(), a.support().end(),
                                  b.support().begin(), b.support().end(),
                                  std::back_inserter(out));
    return RingPoly::from_support(a.modulus(), std::move(out));
}

RingPoly poly_mul(const RingPoly& a, const RingPoly& b) {
    require_same_ring(a, b);
    const std::uint32_t r = a.modulus();
    std::vector<std::uint8_t> coeff(r, 0);
    for (std::uint32_t ea : a.support())
        for (std::uint32_t eb : b.support()) {
            std::uint64_t e = std::uint64_t{ea} + eb;
            coeff[e >= r ? e - r : e] ^= 1;
        }
    std::vector<std::uint32_t> out;
    for (std::uint32_t e = 0; e < r; ++e)
        if (coeff[e]) out.push_back(e);
    return RingPoly::from_support(r, std::move(out));
}

int poly_weight(const RingPoly& a) {
    return static_cast<int>(a.support().size());
}

}  // namespace qcldpc
