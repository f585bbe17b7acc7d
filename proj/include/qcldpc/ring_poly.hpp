// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcldpc/errors.hpp"

namespace qcldpc {

// Element of F2[x]/(x^r - 1), stored as the sorted set of exponents with
// nonzero coefficient. Entries of parity-check matrices are sparse (weight
// <= 3 in practice), so the support set beats a coefficient array.
class RingPoly {
public:
    // Zero polynomial in the ring with the given modulus.
    explicit RingPoly(std::uint32_t r);

    static RingPoly zero(std::uint32_t r) { return RingPoly(r); }
    static RingPoly monomial(std::uint32_t r, std::uint32_t exponent);
    // Accepts exponents in any order; rejects duplicates and out-of-range values.
    static RingPoly from_support(std::uint32_t r, std::vector<std::uint32_t> exponents);

    std::uint32_t modulus() const { return r_; }
    const std::vector<std::uint32_t>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    bool contains(std::uint32_t exponent) const;

    // Entry syntax shared with the QCPM format: "-" for zero, else "0,1,..".
    std::string str() const;

    friend bool operator==(const RingPoly&, const RingPoly&) = default;

private:
    std::uint32_t r_;
    std::vector<std::uint32_t> support_;
};

RingPoly poly_add(const RingPoly& a, const RingPoly& b);
RingPoly poly_mul(const RingPoly& a, const RingPoly& b);
int poly_weight(const RingPoly& a);

}  // namespace qcldpc
