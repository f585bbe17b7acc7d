// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#include "qcldpc/qcldpc.h"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <string>
#include <string_view>
#include <utility>

#include "qcldpc/distance.hpp"
#include "qcldpc/errors.hpp"
#include "qcldpc/qc_matrix.hpp"
#include "qcldpc/report.hpp"
#include "qcldpc/wm_enum.hpp"

struct qcldpc_matrix {
    qcldpc::PolyMatrix m;
};

namespace {

thread_local std::string t_last_error;

char* dup_cstr(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.data(), s.size() + 1);
    return p;
}

qcldpc_status null_arg() {
    t_last_error = "null argument";
    return QCLDPC_ERR_NULLARG;
}

qcldpc_status emit(const std::string& s, char** out) {
    *out = dup_cstr(s);
    if (!*out) {
        t_last_error = "out of memory";
        return QCLDPC_ERR_INTERNAL;
    }
    return QCLDPC_OK;
}

template <typename Fn>
qcldpc_status guarded(Fn&& fn) {
    t_last_error.clear();
    try {
        return fn();
    } catch (const qcldpc::Error& e) {
        t_last_error = e.what();
        switch (e.kind()) {
            case qcldpc::ErrorKind::input:
            case qcldpc::ErrorKind::parse:
                return QCLDPC_ERR_INPUT;
            case qcldpc::ErrorKind::limit:
                return QCLDPC_ERR_LIMIT;
            case qcldpc::ErrorKind::internal:
                break;
        }
        return QCLDPC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return QCLDPC_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown failure";
        return QCLDPC_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* qcldpc_last_error(void) { return t_last_error.c_str(); }

void qcldpc_string_free(char* s) { std::free(s); }

qcldpc_status qcldpc_parse(const char* text, size_t len, qcldpc_matrix** out) {
    if (!text || !out) return null_arg();
    *out = nullptr;
    return guarded([&] {
        auto m = qcldpc::parse_matrix(std::string_view(text, len));
        *out = new qcldpc_matrix{std::move(m)};
        return QCLDPC_OK;
    });
}

qcldpc_status qcldpc_read_file(const char* path, qcldpc_matrix** out) {
    if (!path || !out) return null_arg();
    *out = nullptr;
    return guarded([&] {
        auto m = qcldpc::parse_matrix_file(path);
        *out = new qcldpc_matrix{std::move(m)};
        return QCLDPC_OK;
    });
}

void qcldpc_matrix_free(qcldpc_matrix* m) { delete m; }

int qcldpc_rows(const qcldpc_matrix* m) {
    return m ? static_cast<int>(m->m.rows()) : -1;
}

int qcldpc_cols(const qcldpc_matrix* m) {
    return m ? static_cast<int>(m->m.cols()) : -1;
}

uint32_t qcldpc_modulus(const qcldpc_matrix* m) {
    return m ? m->m.modulus() : 0;
}

qcldpc_status qcldpc_serialize(const qcldpc_matrix* m, char** out) {
    if (!m || !out) return null_arg();
    return guarded([&] { return emit(qcldpc::serialize_matrix(m->m), out); });
}

qcldpc_status qcldpc_analyze_json(const qcldpc_matrix* m, char** out) {
    if (!m || !out) return null_arg();
    return guarded(
        [&] { return emit(qcldpc::render_report_json(qcldpc::analyze(m->m)), out); });
}

qcldpc_status qcldpc_cycles_json(const qcldpc_matrix* m, char** out) {
    if (!m || !out) return null_arg();
    return guarded([&] {
        return emit(qcldpc::render_cycles_json(qcldpc::analyze_cycles(m->m)), out);
    });
}

qcldpc_status qcldpc_expand_text(const qcldpc_matrix* m, char** out) {
    if (!m || !out) return null_arg();
    return guarded(
        [&] { return emit(qcldpc::expand_scalar(m->m).serialize(), out); });
}

qcldpc_status qcldpc_dmin(const qcldpc_matrix* m, int max_dim, int jobs,
                          qcldpc_progress_fn progress, void* user,
                          qcldpc_dmin_result* out) {
    if (!m || !out) return null_arg();
    return guarded([&] {
        const std::size_t md = max_dim <= 0 ? qcldpc::kDminDefaultMaxDim
                                            : static_cast<std::size_t>(max_dim);
        const std::size_t nj = jobs <= 0 ? 0 : static_cast<std::size_t>(jobs);
        qcldpc::DminProgress cb;
        if (progress)
            cb = [progress, user](std::uint64_t done, std::uint64_t total) {
                return progress(done, total, user) != 0;
            };
        auto p = qcldpc::dmin_exhaustive(m->m, md, nj, cb);
        out->status = p.dmin_status == qcldpc::DminStatus::exact      ? 0
                      : p.dmin_status == qcldpc::DminStatus::upper_only ? 1
                                                                        : 2;
        out->dmin = p.dmin.value_or(0);
        out->dmin_upper =
            p.dmin_upper.is_inf() ? UINT64_MAX : p.dmin_upper.value();
        out->n = p.n;
        out->k = p.k;
        return QCLDPC_OK;
    });
}

qcldpc_status qcldpc_cover_json(const qcldpc_matrix* m, int interleaved,
                                const char* split_text, int64_t base_dmin,
                                char** qcpm_out, char** json_out) {
    if (!m) return null_arg();
    return guarded([&] {
        auto split = split_text
                         ? qcldpc::parse_split(
                               m->m, qcldpc::parse_matrix(
                                         std::string_view(split_text)))
                         : qcldpc::split_auto(m->m);
        std::optional<std::uint64_t> bd;
        if (base_dmin >= 0) bd = static_cast<std::uint64_t>(base_dmin);
        auto rep =
            qcldpc::analyze_cover(m->m, split, interleaved != 0, bd);
        if (qcpm_out) {
            auto st = emit(qcldpc::serialize_matrix(rep.cover), qcpm_out);
            if (st != QCLDPC_OK) return st;
        }
        if (json_out) {
            auto st = emit(qcldpc::render_cover_json(rep), json_out);
            if (st != QCLDPC_OK) {
                if (qcpm_out) {
                    qcldpc_string_free(*qcpm_out);
                    *qcpm_out = nullptr;
                }
                return st;
            }
        }
        return QCLDPC_OK;
    });
}

qcldpc_status qcldpc_enum_wm_json(int rows, int cols, int col_sum, int row_sum,
                                  int max_entry, char** out) {
    if (!out) return null_arg();
    return guarded([&] {
        if (rows <= 0 || cols <= 0)
            throw qcldpc::InputError("matrix dimensions must be positive");
        auto cs = qcldpc::enumerate_wm(static_cast<std::size_t>(rows),
                                       static_cast<std::size_t>(cols), col_sum,
                                       row_sum, max_entry);
        return emit(qcldpc::render_wm_classes_json(cs), out);
    });
}

}  // extern "C"
