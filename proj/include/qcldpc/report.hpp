// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcldpc/bounds.hpp"
#include "qcldpc/covers.hpp"
#include "qcldpc/cycles.hpp"
#include "qcldpc/distance.hpp"
#include "qcldpc/ext_int.hpp"
#include "qcldpc/qc_matrix.hpp"
#include "qcldpc/wm_enum.hpp"

namespace qcldpc {

// Everything `analyze` reports. Exhaustive distance is deliberately not
// part of this; rank/k come from elimination only.
struct CodeReport {
    std::uint32_t r = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    int type_M = 0;
    std::optional<std::pair<int, int>> regularity;  // (col_sum, row_sum)
    WeightMatrix weight_matrix;
    ExtInt bound_eq1 = ExtInt::infinity();
    ExtInt bound_eq2 = ExtInt::infinity();
    ExtInt bound_factorial = ExtInt::infinity();   // type-I cap, else +inf
    ExtInt bound_girth_adjusted = ExtInt::infinity();  // type-I only
    ExtInt girth = ExtInt::infinity();
    ExtInt diameter = ExtInt::infinity();
    std::optional<bool> four_cycle_free;  // type <= 2 only
};

CodeReport analyze(const PolyMatrix& H);

struct CyclesReport {
    int type_M = 0;
    ExtInt girth = ExtInt::infinity();
    ExtInt diameter = ExtInt::infinity();
    ExtInt wm_cap = ExtInt::infinity();
    std::optional<CycleWitness> four_cycle;       // monomial scan, type 1 only
    std::optional<CycleWitness> six_cycle;        // monomial scan, type 1 only
    std::optional<FourCycleFreeResult> type2;     // binomial test, type <= 2
};

CyclesReport analyze_cycles(const PolyMatrix& H);

struct CoverReport {
    PolyMatrix cover;
    bool interleaved = false;
    std::pair<int, int> base_shape;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::pair<int, int>> regularity;
    bool projection_ok = false;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> sandwich;
};

CoverReport analyze_cover(const PolyMatrix& H, const CoverSplit& split,
                          bool interleaved,
                          std::optional<std::uint64_t> base_dmin);

// Renderers. JSON output has fixed field order and no volatile content, so
// identical inputs produce byte-identical bytes. +inf renders as "inf".
std::string render_report_text(const CodeReport& rep);
std::string render_report_json(const CodeReport& rep);
std::string render_cycles_text(const CyclesReport& rep);
std::string render_cycles_json(const CyclesReport& rep);
std::string render_dmin_text(const CodeParams& p);
std::string render_dmin_json(const CodeParams& p);
std::string render_cover_text(const CoverReport& rep);
std::string render_cover_json(const CoverReport& rep);
std::string render_wm_classes_text(const std::vector<WmClass>& classes);
std::string render_wm_classes_json(const std::vector<WmClass>& classes);

}  // namespace qcldpc
