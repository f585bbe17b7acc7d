// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#include "qcldpc/report.hpp"

#include <string>

#include "json.hpp"
#include "qcldpc/errors.hpp"

namespace qcldpc {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json ext_json(const ExtInt& e) {
    if (e.is_inf()) return "inf";
    return e.value();
}

ordered_json wm_json(const WeightMatrix& A) {
    ordered_json rows = ordered_json::array();
    for (std::size_t j = 0; j < A.rows(); ++j) {
        ordered_json row = ordered_json::array();
        for (std::size_t i = 0; i < A.cols(); ++i) row.push_back(A.at(j, i));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json index_json(const std::vector<std::size_t>& v) {
    ordered_json a = ordered_json::array();
    for (std::size_t x : v) a.push_back(x);
    return a;
}

ordered_json witness_json(const CycleWitness& w) {
    ordered_json j;
    j["R"] = w.R;
    j["rows"] = index_json(w.row_set);
    j["cols"] = index_json(w.col_set);
    j["sigma"] = index_json(w.sigma);
    j["tau"] = index_json(w.tau);
    j["single_cycle"] = w.pi_single_cycle;
    j["equation"] = w.equation;
    return j;
}

std::string index_list(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string wm_text(const WeightMatrix& A, const char* indent) {
    std::string s;
    for (std::size_t j = 0; j < A.rows(); ++j) {
        s += indent;
        for (std::size_t i = 0; i < A.cols(); ++i) {
            if (i) s += ' ';
            s += std::to_string(A.at(j, i));
        }
        s += '\n';
    }
    return s;
}

const char* status_name(DminStatus s) {
    switch (s) {
        case DminStatus::exact: return "exact";
        case DminStatus::upper_only: return "upper_only";
        case DminStatus::capped: return "capped";
    }
    return "unknown";
}

}  // namespace

CodeReport analyze(const PolyMatrix& H) {
    const std::size_t J = H.rows(), L = H.cols();
    auto Hs = expand_scalar(H);
    auto A = weight_matrix(H);
    auto cls = classify(H);

    ExtInt e1, e2, ef, eg;
    if (L > J) {
        e1 = bound_eq1(H).value;
        auto r2 = bound_eq2(A);
        e2 = r2.value;
        // the weight-level minimum may only undercut the polynomial one on a
        // subset whose cofactor codeword vanishes
        if (e2 < e1 && polyvec_weight(construct_codeword(H, r2.achieving_subset)) != 0)
            throw InternalError("weight bound undercuts a nonzero codeword");
    }
    if (cls.type_M == 1) {
        // the plain cap is reported only when no repeated elementary
        // products are found; with collisions the adjusted cap supersedes it
        const std::size_t top = std::min({J, L, kEqualProductsGuard});
        bool collision = false;
        for (std::size_t R = 2; R <= top && !collision; ++R)
            collision = equal_products(H, R).has_value();
        try {
            if (!collision) ef = ExtInt::of(bound_factorial(J));
            if (L > J) eg = bound_girth_adjusted(H).value;
        } catch (const LimitError&) {
            // factorial overflow past 20 rows; leave the caps at +inf
        }
    }

    auto g = build_tanner(Hs);
    std::optional<bool> fcf;
    if (cls.type_M <= 2) fcf = type2_4cycle_free(H).pass;

    return CodeReport{H.modulus(),
                      Hs.n_cols(),
                      Hs.n_cols() - gf2_rank(Hs),
                      cls.type_M,
                      cls.regularity,
                      std::move(A),
                      e1,
                      e2,
                      ef,
                      eg,
                      girth(g),
                      diameter(g),
                      fcf};
}

CyclesReport analyze_cycles(const PolyMatrix& H) {
    auto A = weight_matrix(H);
    CyclesReport rep;
    rep.type_M = A.max_entry();
    auto g = build_tanner(expand_scalar(H));
    rep.girth = girth(g);
    rep.diameter = diameter(g);
    rep.wm_cap = wm_girth_caps(A);
    if (rep.type_M == 1) {
        rep.four_cycle = detect_4cycle_type1(H);
        rep.six_cycle = detect_6cycle_type1(H);
    }
    if (rep.type_M <= 2) rep.type2 = type2_4cycle_free(H);
    return rep;
}

CoverReport analyze_cover(const PolyMatrix& H, const CoverSplit& split,
                          bool interleaved,
                          std::optional<std::uint64_t> base_dmin) {
    PolyMatrix cover =
        interleaved ? build_cover_interleaved(split) : build_cover_block(split);
    auto Cs = expand_scalar(cover);
    auto cls = classify(cover);
    bool ok = verify_cover_projection(cover, H);
    std::optional<std::pair<std::uint64_t, std::uint64_t>> sandwich;
    if (base_dmin) sandwich = cover_distance_bounds(*base_dmin);
    return CoverReport{std::move(cover),
                       interleaved,
                       {static_cast<int>(H.rows()), static_cast<int>(H.cols())},
                       Cs.n_cols(),
                       Cs.n_cols() - gf2_rank(Cs),
                       cls.regularity,
                       ok,
                       sandwich};
}

std::string render_report_text(const CodeReport& rep) {
    std::string s;
    s += "r: " + std::to_string(rep.r) + "\n";
    s += "n: " + std::to_string(rep.n) + "\n";
    s += "k: " + std::to_string(rep.k) + "\n";
    s += "type: " + std::to_string(rep.type_M) + "\n";
    if (rep.regularity)
        s += "regularity: (" + std::to_string(rep.regularity->first) + "," +
             std::to_string(rep.regularity->second) + ")\n";
    else
        s += "regularity: irregular\n";
    s += "weight matrix:\n" + wm_text(rep.weight_matrix, "  ");
    s += "bound poly: " + rep.bound_eq1.str() + "\n";
    s += "bound wm: " + rep.bound_eq2.str() + "\n";
    s += "bound factorial: " + rep.bound_factorial.str() + "\n";
    s += "bound girth-adjusted: " + rep.bound_girth_adjusted.str() + "\n";
    s += "girth: " + rep.girth.str() + "\n";
    s += "diameter: " + rep.diameter.str() + "\n";
    if (rep.four_cycle_free)
        s += std::string("four-cycle-free: ") +
             (*rep.four_cycle_free ? "yes" : "no") + "\n";
    return s;
}

std::string render_report_json(const CodeReport& rep) {
    ordered_json j;
    j["r"] = rep.r;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["type"] = rep.type_M;
    if (rep.regularity)
        j["regularity"] = {rep.regularity->first, rep.regularity->second};
    else
        j["regularity"] = nullptr;
    j["weight_matrix"] = wm_json(rep.weight_matrix);
    j["bounds"]["poly"] = ext_json(rep.bound_eq1);
    j["bounds"]["wm"] = ext_json(rep.bound_eq2);
    j["bounds"]["factorial"] = ext_json(rep.bound_factorial);
    j["bounds"]["girth_adjusted"] = ext_json(rep.bound_girth_adjusted);
    j["girth"] = ext_json(rep.girth);
    j["diameter"] = ext_json(rep.diameter);
    if (rep.four_cycle_free) j["four_cycle_free"] = *rep.four_cycle_free;
    return j.dump();
}

std::string render_cycles_text(const CyclesReport& rep) {
    std::string s;
    s += "type: " + std::to_string(rep.type_M) + "\n";
    s += "girth: " + rep.girth.str() + "\n";
    s += "diameter: " + rep.diameter.str() + "\n";
    s += "wm cap: " + rep.wm_cap.str() + "\n";
    if (rep.type_M == 1) {
        s += "4-cycle: " +
             (rep.four_cycle ? rep.four_cycle->equation : std::string("none")) +
             "\n";
        s += "6-cycle: " +
             (rep.six_cycle ? rep.six_cycle->equation : std::string("none")) +
             "\n";
    }
    if (rep.type2) {
        s += std::string("four-cycle-free: ") + (rep.type2->pass ? "yes" : "no") +
             "\n";
        for (const auto& v : rep.type2->violations)
            s += "  condition " + std::to_string(v.condition) + " rows " +
                 index_list(v.row_set) + " cols " + index_list(v.col_set) +
                 ": " + v.detail + "\n";
    }
    return s;
}

std::string render_cycles_json(const CyclesReport& rep) {
    ordered_json j;
    j["type"] = rep.type_M;
    j["girth"] = ext_json(rep.girth);
    j["diameter"] = ext_json(rep.diameter);
    j["wm_cap"] = ext_json(rep.wm_cap);
    if (rep.type_M == 1) {
        j["four_cycle"] =
            rep.four_cycle ? witness_json(*rep.four_cycle) : ordered_json();
        j["six_cycle"] =
            rep.six_cycle ? witness_json(*rep.six_cycle) : ordered_json();
    }
    if (rep.type2) {
        ordered_json t;
        t["pass"] = rep.type2->pass;
        t["violations"] = ordered_json::array();
        for (const auto& v : rep.type2->violations) {
            ordered_json vj;
            vj["condition"] = v.condition;
            vj["rows"] = index_json(v.row_set);
            vj["cols"] = index_json(v.col_set);
            vj["detail"] = v.detail;
            t["violations"].push_back(std::move(vj));
        }
        j["type2"] = std::move(t);
    }
    return j.dump();
}

std::string render_dmin_text(const CodeParams& p) {
    std::string s;
    s += "n: " + std::to_string(p.n) + "\n";
    s += "k: " + std::to_string(p.k) + "\n";
    if (p.dmin) s += "dmin: " + std::to_string(*p.dmin) + "\n";
    s += "dmin_upper: " + p.dmin_upper.str() + "\n";
    s += std::string("status: ") + status_name(p.dmin_status) + "\n";
    return s;
}

std::string render_dmin_json(const CodeParams& p) {
    ordered_json j;
    j["n"] = p.n;
    j["k"] = p.k;
    if (p.dmin) j["dmin"] = *p.dmin;
    j["dmin_upper"] = ext_json(p.dmin_upper);
    j["status"] = status_name(p.dmin_status);
    return j.dump();
}

std::string render_cover_text(const CoverReport& rep) {
    std::string s = serialize_matrix(rep.cover);
    s += std::string("# layout: ") + (rep.interleaved ? "interleaved" : "block") +
         "\n";
    s += "# base: " + std::to_string(rep.base_shape.first) + " x " +
         std::to_string(rep.base_shape.second) + "\n";
    s += "# n: " + std::to_string(rep.n) + "\n";
    s += "# k: " + std::to_string(rep.k) + "\n";
    if (rep.regularity)
        s += "# regularity: (" + std::to_string(rep.regularity->first) + "," +
             std::to_string(rep.regularity->second) + ")\n";
    else
        s += "# regularity: irregular\n";
    s += std::string("# projection: ") + (rep.projection_ok ? "ok" : "failed") +
         "\n";
    if (rep.sandwich)
        s += "# sandwich: [" + std::to_string(rep.sandwich->first) + ", " +
             std::to_string(rep.sandwich->second) + "]\n";
    return s;
}

std::string render_cover_json(const CoverReport& rep) {
    ordered_json j;
    j["layout"] = rep.interleaved ? "interleaved" : "block";
    j["base_rows"] = rep.base_shape.first;
    j["base_cols"] = rep.base_shape.second;
    j["n"] = rep.n;
    j["k"] = rep.k;
    if (rep.regularity)
        j["regularity"] = {rep.regularity->first, rep.regularity->second};
    else
        j["regularity"] = nullptr;
    j["projection_ok"] = rep.projection_ok;
    if (rep.sandwich) j["sandwich"] = {rep.sandwich->first, rep.sandwich->second};
    j["matrix"] = serialize_matrix(rep.cover);
    return j.dump();
}

std::string render_wm_classes_text(const std::vector<WmClass>& classes) {
    std::string s = std::to_string(classes.size()) +
                    (classes.size() == 1 ? " class\n" : " classes\n");
    for (const auto& c : classes) {
        s += "bound " + c.bound.str() + ":\n";
        s += wm_text(c.canonical, "  ");
    }
    return s;
}

std::string render_wm_classes_json(const std::vector<WmClass>& classes) {
    ordered_json j;
    j["count"] = classes.size();
    j["classes"] = ordered_json::array();
    for (const auto& c : classes) {
        ordered_json cj;
        cj["weight_matrix"] = wm_json(c.canonical);
        cj["bound"] = ext_json(c.bound);
        j["classes"].push_back(std::move(cj));
    }
    return j.dump();
}

}  // namespace qcldpc
