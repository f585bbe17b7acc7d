/* Copyright 2026 the qcldpc authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API of the qcldpc shared library. All functions are thread-compatible;
 * the last-error string is thread-local. Strings returned through `char **`
 * are heap-allocated and must be released with qcldpc_string_free.
 */

#ifndef QCLDPC_QCLDPC_H_
#define QCLDPC_QCLDPC_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qcldpc_matrix qcldpc_matrix;

typedef enum qcldpc_status {
    QCLDPC_OK = 0,
    QCLDPC_ERR_INPUT = 2,  /* bad input or parse failure */
    QCLDPC_ERR_LIMIT = 3,  /* size/overflow guard tripped */
    QCLDPC_ERR_INTERNAL = 4,
    QCLDPC_ERR_NULLARG = 5
} qcldpc_status;

/* Message for the most recent failing call on this thread; empty string
 * when no failure occurred. The pointer stays valid until the next failing
 * call on the same thread. */
const char* qcldpc_last_error(void);

void qcldpc_string_free(char* s);

/* Parsing. qcldpc_parse reads the grid format from a buffer (need not be
 * NUL-terminated), qcldpc_read_file from a path. */
qcldpc_status qcldpc_parse(const char* text, size_t len, qcldpc_matrix** out);
qcldpc_status qcldpc_read_file(const char* path, qcldpc_matrix** out);
void qcldpc_matrix_free(qcldpc_matrix* m);

int qcldpc_rows(const qcldpc_matrix* m);
int qcldpc_cols(const qcldpc_matrix* m);
uint32_t qcldpc_modulus(const qcldpc_matrix* m);
qcldpc_status qcldpc_serialize(const qcldpc_matrix* m, char** out);

/* Full analysis report (bounds, girth, diameter, rank-derived k) as JSON.
 * Never runs the exhaustive distance enumeration. */
qcldpc_status qcldpc_analyze_json(const qcldpc_matrix* m, char** out);

/* Cycle-structure report as JSON. */
qcldpc_status qcldpc_cycles_json(const qcldpc_matrix* m, char** out);

/* Binary expansion as rows of 0/1 characters, one row per line. */
qcldpc_status qcldpc_expand_text(const qcldpc_matrix* m, char** out);

typedef struct qcldpc_dmin_result {
    /* 0 exact, 1 upper bound only, 2 dimension over max_dim */
    int status;
    /* valid when status == 0 */
    uint64_t dmin;
    /* best upper bound, UINT64_MAX for +inf */
    uint64_t dmin_upper;
    uint64_t n;
    uint64_t k;
} qcldpc_dmin_result;

/* Progress callback: return 0 to cancel (degrades the result to an upper
 * bound). NULL for no progress reporting. */
typedef int (*qcldpc_progress_fn)(uint64_t done, uint64_t total, void* user);

/* Exhaustive minimum distance. max_dim <= 0 selects the built-in default;
 * jobs == 0 selects hardware concurrency. */
qcldpc_status qcldpc_dmin(const qcldpc_matrix* m, int max_dim, int jobs,
                          qcldpc_progress_fn progress, void* user,
                          qcldpc_dmin_result* out);

/* Double cover. split_text is an optional manual split (part1 in the grid
 * format; pass NULL for the automatic rule), base_dmin < 0 omits the
 * sandwich bounds. qcpm_out receives the cover matrix in grid format,
 * json_out the report; either may be NULL if not wanted. */
qcldpc_status qcldpc_cover_json(const qcldpc_matrix* m, int interleaved,
                                const char* split_text, int64_t base_dmin,
                                char** qcpm_out, char** json_out);

/* Regular weight-matrix enumeration; returns the class list as JSON. */
qcldpc_status qcldpc_enum_wm_json(int rows, int cols, int col_sum,
                                  int row_sum, int max_entry, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QCLDPC_QCLDPC_H_ */
