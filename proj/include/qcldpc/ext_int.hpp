// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "qcldpc/errors.hpp"

namespace qcldpc {

// Non-negative integer extended with +infinity. Bounds, girth and diameter
// all take the value +inf in degenerate cases (empty minimum, acyclic graph,
// disconnected graph), so the "no value" state is explicit rather than a
// sentinel integer.
class ExtInt {
public:
    constexpr ExtInt() : inf_(true), value_(0) {}

    static constexpr ExtInt infinity() { return ExtInt(); }

    static constexpr ExtInt of(std::uint64_t v) {
        ExtInt e;
        e.inf_ = false;
        e.value_ = v;
        return e;
    }

    constexpr bool is_inf() const { return inf_; }
    constexpr bool is_finite() const { return !inf_; }

    std::uint64_t value() const {
        if (inf_) throw InternalError("ExtInt: value() on +inf");
        return value_;
    }

    friend constexpr bool operator==(const ExtInt&, const ExtInt&) = default;

    friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
        if (a.inf_ && b.inf_) return std::strong_ordering::equal;
        if (a.inf_) return std::strong_ordering::greater;
        if (b.inf_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    friend constexpr bool operator==(const ExtInt& a, std::uint64_t v) {
        return !a.inf_ && a.value_ == v;
    }

    std::string str() const { return inf_ ? "inf" : std::to_string(value_); }

private:
    bool inf_;
    std::uint64_t value_;
};

}  // namespace qcldpc
