// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcldpc/qcldpc.h"

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

struct MatrixGuard {
    qcldpc_matrix* m = nullptr;
    ~MatrixGuard() { qcldpc_matrix_free(m); }
};

struct StrGuard {
    char* s = nullptr;
    ~StrGuard() { qcldpc_string_free(s); }
};

int status_to_exit(qcldpc_status st) {
    switch (st) {
        case QCLDPC_OK:
            return 0;
        case QCLDPC_ERR_INPUT:
            return 2;
        default:
            return 3;
    }
}

int fail(qcldpc_status st) {
    std::fprintf(stderr, "error: %s\n", qcldpc_last_error());
    return status_to_exit(st);
}

// "inf" stays a string, numbers print as decimal
std::string ext_str(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return std::to_string(v.get<std::uint64_t>());
}

std::string grid_text(const json& rows, const char* indent) {
    std::string s;
    for (const auto& row : rows) {
        s += indent;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(row[i].get<int>());
        }
        s += '\n';
    }
    return s;
}

std::string regularity_str(const json& v) {
    if (v.is_null()) return "irregular";
    return "(" + std::to_string(v[0].get<int>()) + "," +
           std::to_string(v[1].get<int>()) + ")";
}

std::string analyze_text(const json& j) {
    std::string s;
    s += "r: " + ext_str(j["r"]) + "\n";
    s += "n: " + ext_str(j["n"]) + "\n";
    s += "k: " + ext_str(j["k"]) + "\n";
    s += "type: " + ext_str(j["type"]) + "\n";
    s += "regularity: " + regularity_str(j["regularity"]) + "\n";
    s += "weight matrix:\n" + grid_text(j["weight_matrix"], "  ");
    s += "bound poly: " + ext_str(j["bounds"]["poly"]) + "\n";
    s += "bound wm: " + ext_str(j["bounds"]["wm"]) + "\n";
    s += "bound factorial: " + ext_str(j["bounds"]["factorial"]) + "\n";
    s += "bound girth-adjusted: " + ext_str(j["bounds"]["girth_adjusted"]) + "\n";
    s += "girth: " + ext_str(j["girth"]) + "\n";
    s += "diameter: " + ext_str(j["diameter"]) + "\n";
    if (j.contains("four_cycle_free"))
        s += std::string("four-cycle-free: ") +
             (j["four_cycle_free"].get<bool>() ? "yes" : "no") + "\n";
    return s;
}

std::string index_list(const json& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i].get<std::uint64_t>());
    }
    return s + ")";
}

std::string cycles_text(const json& j) {
    std::string s;
    s += "type: " + ext_str(j["type"]) + "\n";
    s += "girth: " + ext_str(j["girth"]) + "\n";
    s += "diameter: " + ext_str(j["diameter"]) + "\n";
    s += "wm cap: " + ext_str(j["wm_cap"]) + "\n";
    if (j.contains("four_cycle"))
        s += "4-cycle: " +
             (j["four_cycle"].is_null()
                  ? std::string("none")
                  : j["four_cycle"]["equation"].get<std::string>()) +
             "\n";
    if (j.contains("six_cycle"))
        s += "6-cycle: " +
             (j["six_cycle"].is_null()
                  ? std::string("none")
                  : j["six_cycle"]["equation"].get<std::string>()) +
             "\n";
    if (j.contains("type2")) {
        s += std::string("four-cycle-free: ") +
             (j["type2"]["pass"].get<bool>() ? "yes" : "no") + "\n";
        for (const auto& v : j["type2"]["violations"])
            s += "  condition " + ext_str(v["condition"]) + " rows " +
                 index_list(v["rows"]) + " cols " + index_list(v["cols"]) +
                 ": " + v["detail"].get<std::string>() + "\n";
    }
    return s;
}

std::string cover_comments(const json& j) {
    std::string s;
    s += "# layout: " + j["layout"].get<std::string>() + "\n";
    s += "# base: " + ext_str(j["base_rows"]) + " x " + ext_str(j["base_cols"]) +
         "\n";
    s += "# n: " + ext_str(j["n"]) + "\n";
    s += "# k: " + ext_str(j["k"]) + "\n";
    s += "# regularity: " + regularity_str(j["regularity"]) + "\n";
    s += std::string("# projection: ") +
         (j["projection_ok"].get<bool>() ? "ok" : "failed") + "\n";
    if (j.contains("sandwich"))
        s += "# sandwich: [" + ext_str(j["sandwich"][0]) + ", " +
             ext_str(j["sandwich"][1]) + "]\n";
    return s;
}

std::string wm_classes_text(const json& j) {
    const auto count = j["count"].get<std::uint64_t>();
    std::string s =
        std::to_string(count) + (count == 1 ? " class\n" : " classes\n");
    for (const auto& c : j["classes"]) {
        s += "bound " + ext_str(c["bound"]) + ":\n";
        s += grid_text(c["weight_matrix"], "  ");
    }
    return s;
}

int load_matrix(const std::string& path, MatrixGuard& g) {
    auto st = qcldpc_read_file(path.c_str(), &g.m);
    return st == QCLDPC_OK ? 0 : fail(st);
}

int run_analyze(const std::string& path, bool as_json) {
    MatrixGuard g;
    if (int rc = load_matrix(path, g)) return rc;
    StrGuard out;
    if (auto st = qcldpc_analyze_json(g.m, &out.s); st != QCLDPC_OK)
        return fail(st);
    if (as_json)
        std::printf("%s\n", out.s);
    else
        std::fputs(analyze_text(json::parse(out.s)).c_str(), stdout);
    return 0;
}

int run_cycles(const std::string& path, bool as_json) {
    MatrixGuard g;
    if (int rc = load_matrix(path, g)) return rc;
    StrGuard out;
    if (auto st = qcldpc_cycles_json(g.m, &out.s); st != QCLDPC_OK)
        return fail(st);
    if (as_json)
        std::printf("%s\n", out.s);
    else
        std::fputs(cycles_text(json::parse(out.s)).c_str(), stdout);
    return 0;
}

int run_expand(const std::string& path, bool as_json) {
    MatrixGuard g;
    if (int rc = load_matrix(path, g)) return rc;
    StrGuard out;
    if (auto st = qcldpc_expand_text(g.m, &out.s); st != QCLDPC_OK)
        return fail(st);
    if (!as_json) {
        std::fputs(out.s, stdout);
        return 0;
    }
    std::vector<std::string> rows;
    std::istringstream in(out.s);
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    ordered_json j;
    j["n_rows"] = rows.size();
    j["n_cols"] = rows.empty() ? 0 : rows[0].size();
    j["rows"] = rows;
    std::printf("%s\n", j.dump().c_str());
    return 0;
}

int progress_to_stderr(uint64_t done, uint64_t total, void*) {
    std::fprintf(stderr, "searched %llu of %llu codewords\n",
                 static_cast<unsigned long long>(done),
                 static_cast<unsigned long long>(total));
    return 1;
}

int run_dmin(const std::string& path, bool as_json, int max_dim, int jobs) {
    MatrixGuard g;
    if (int rc = load_matrix(path, g)) return rc;
    qcldpc_dmin_result res;
    if (auto st = qcldpc_dmin(g.m, max_dim, jobs, progress_to_stderr, nullptr,
                              &res);
        st != QCLDPC_OK)
        return fail(st);
    const char* status = res.status == 0   ? "exact"
                         : res.status == 1 ? "upper_only"
                                           : "capped";
    if (as_json) {
        ordered_json j;
        j["n"] = res.n;
        j["k"] = res.k;
        if (res.status == 0) j["dmin"] = res.dmin;
        if (res.dmin_upper == UINT64_MAX)
            j["dmin_upper"] = "inf";
        else
            j["dmin_upper"] = res.dmin_upper;
        j["status"] = status;
        std::printf("%s\n", j.dump().c_str());
        return 0;
    }
    std::string s;
    s += "n: " + std::to_string(res.n) + "\n";
    s += "k: " + std::to_string(res.k) + "\n";
    if (res.status == 0) s += "dmin: " + std::to_string(res.dmin) + "\n";
    s += "dmin_upper: " + (res.dmin_upper == UINT64_MAX
                               ? std::string("inf")
                               : std::to_string(res.dmin_upper)) +
         "\n";
    s += std::string("status: ") + status + "\n";
    std::fputs(s.c_str(), stdout);
    return 0;
}

int run_cover(const std::string& path, bool as_json, const std::string& mode,
              const std::string& split_file, std::int64_t base_dmin) {
    MatrixGuard g;
    if (int rc = load_matrix(path, g)) return rc;
    std::string split_text;
    if (!split_file.empty()) {
        std::ifstream in(split_file, std::ios::binary);
        if (!in) {
            std::fprintf(stderr, "error: cannot open file: %s\n",
                         split_file.c_str());
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        split_text = ss.str();
    }
    StrGuard qcpm, jout;
    if (auto st = qcldpc_cover_json(g.m, mode == "interleaved" ? 1 : 0,
                                    split_file.empty() ? nullptr
                                                       : split_text.c_str(),
                                    base_dmin, &qcpm.s, &jout.s);
        st != QCLDPC_OK)
        return fail(st);
    if (as_json) {
        std::printf("%s\n", jout.s);
        return 0;
    }
    std::fputs(qcpm.s, stdout);
    std::fputs(cover_comments(json::parse(jout.s)).c_str(), stdout);
    return 0;
}

int run_enum_wm(bool as_json, int J, int L, int col_sum, int row_sum,
                int max_entry) {
    StrGuard out;
    if (auto st =
            qcldpc_enum_wm_json(J, L, col_sum, row_sum, max_entry, &out.s);
        st != QCLDPC_OK)
        return fail(st);
    auto j = json::parse(out.s);

    // previously tabulated counts for the regular 3x4 family; a mismatch is
    // worth flagging but the exhaustive enumeration stands
    if (J == 3 && L == 4 && col_sum == 3 && row_sum == 4) {
        std::int64_t tabulated = max_entry == 2 ? 5 : max_entry == 3 ? 8 : -1;
        auto count = j["count"].get<std::int64_t>();
        if (tabulated >= 0 && count != tabulated)
            std::fprintf(stderr,
                         "note: enumeration finds %lld classes; %lld were "
                         "previously tabulated for this shape\n",
                         static_cast<long long>(count),
                         static_cast<long long>(tabulated));
    }

    if (as_json)
        std::printf("%s\n", out.s);
    else
        std::fputs(wm_classes_text(j).c_str(), stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-cyclic LDPC parity-check matrix analysis"};
    app.require_subcommand(1);

    std::string file;
    bool as_json = false;

    auto* analyze =
        app.add_subcommand("analyze", "bounds, rank and cycle summary");
    analyze->add_option("file", file, "matrix in grid format")->required();
    analyze->add_flag("--json", as_json, "emit JSON");

    auto* cycles = app.add_subcommand("cycles", "cycle structure report");
    cycles->add_option("file", file, "matrix in grid format")->required();
    cycles->add_flag("--json", as_json, "emit JSON");

    auto* expand = app.add_subcommand("expand", "print the binary expansion");
    expand->add_option("file", file, "matrix in grid format")->required();
    expand->add_flag("--json", as_json, "emit JSON");

    int max_dim = 0, jobs = 0;
    auto* dmin =
        app.add_subcommand("dmin", "exhaustive minimum-distance search");
    dmin->add_option("file", file, "matrix in grid format")->required();
    dmin->add_flag("--json", as_json, "emit JSON");
    dmin->add_option("--max-dim", max_dim,
                     "largest code dimension to enumerate (0 = default)");
    dmin->add_option("--jobs", jobs, "worker threads (0 = all cores)");

    std::string mode = "block", split_file;
    std::int64_t base_dmin = -1;
    auto* cover = app.add_subcommand("cover", "build a double cover");
    cover->add_option("file", file, "matrix in grid format")->required();
    cover->add_flag("--json", as_json, "emit JSON");
    cover->add_option("--mode", mode, "cover layout")
        ->check(CLI::IsMember({"block", "interleaved"}));
    cover->add_option("--split-file", split_file,
                      "first summand of a manual split, grid format");
    cover->add_option("--base-dmin", base_dmin,
                      "known base distance for sandwich bounds");

    int J = 0, L = 0, col_sum = 0, row_sum = 0, max_entry = 0;
    auto* enum_wm = app.add_subcommand(
        "enum-wm", "enumerate regular weight matrices up to equivalence");
    enum_wm->add_option("-J", J, "rows")->required();
    enum_wm->add_option("-L", L, "columns")->required();
    enum_wm->add_option("--col-sum", col_sum, "column sum")->required();
    enum_wm->add_option("--row-sum", row_sum, "row sum")->required();
    enum_wm->add_option("--max-entry", max_entry, "largest entry")->required();
    enum_wm->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (analyze->parsed()) return run_analyze(file, as_json);
    if (cycles->parsed()) return run_cycles(file, as_json);
    if (expand->parsed()) return run_expand(file, as_json);
    if (dmin->parsed()) return run_dmin(file, as_json, max_dim, jobs);
    if (cover->parsed())
        return run_cover(file, as_json, mode, split_file, base_dmin);
    if (enum_wm->parsed())
        return run_enum_wm(as_json, J, L, col_sum, row_sum, max_entry);
    return 2;
}
