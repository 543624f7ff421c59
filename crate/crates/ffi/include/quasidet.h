#ifndef QUASIDET_H
#define QUASIDET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Quasideterminant evaluation route.
 */
typedef enum QdMethod {
  QD_METHOD_AUTO = 0,
  QD_METHOD_RECURSIVE = 1,
  QD_METHOD_MINOR_INVERSE = 2,
} QdMethod;

/**
 * Result of every call.
 */
typedef enum QdStatus {
  QD_STATUS_OK = 0,
  /**
   * The value is undefined: a required inverse does not exist.
   */
  QD_STATUS_DOMAIN = 1,
  QD_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A row or column label is out of range.
   */
  QD_STATUS_INDEX = 3,
  QD_STATUS_PARSE = 4,
  QD_STATUS_NULL_POINTER = 5,
  /**
   * An internal panic was caught at the boundary.
   */
  QD_STATUS_PANIC = 6,
} QdStatus;

/**
 * Opaque matrix over the rationals.
 */
typedef struct QdMatrix QdMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * New `rows x cols` zero matrix.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum QdStatus qd_matrix_new(size_t rows, size_t cols, struct QdMatrix **out);

/**
 * Matrix from the JSON matrix-file format with constant entries.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum QdStatus qd_matrix_from_json(const char *json, struct QdMatrix **out);

/**
 * Release a matrix. Null is ignored.
 *
 * # Safety
 * `m` must come from this library and not be used afterwards.
 */
void qd_matrix_free(struct QdMatrix *m);

/**
 * Matrix dimensions.
 *
 * # Safety
 * `m` must be a live handle; `rows` and `cols` must be writable.
 */
enum QdStatus qd_matrix_shape(const struct QdMatrix *m, size_t *rows, size_t *cols);

/**
 * Set entry `(i, j)` from a rational string such as `"-3/4"`.
 *
 * # Safety
 * `m` must be a live handle; `value` a NUL-terminated string.
 */
enum QdStatus qd_matrix_set_entry(struct QdMatrix *m, size_t i, size_t j, const char *value);

/**
 * Entry `(i, j)` as a rational string.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum QdStatus qd_matrix_get_entry(const struct QdMatrix *m, size_t i, size_t j, char **out);

/**
 * Quasideterminant `|A|_pq` as a rational string.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum QdStatus qd_qdet(const struct QdMatrix *m,
                      size_t p,
                      size_t q,
                      enum QdMethod method,
                      char **out);

/**
 * Inverse matrix as a new handle.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum QdStatus qd_matrix_inverse(const struct QdMatrix *m, struct QdMatrix **out);

/**
 * Left quasi-Plücker coordinate of a `k x n` matrix; `set` holds the `k - 1`
 * column labels of `I`. `pivot_row` 0 picks the first defined row.
 *
 * # Safety
 * `m` must be a live handle; `set` must point to `set_len` labels; `out`
 * must be writable.
 */
enum QdStatus qd_left_qpc(const struct QdMatrix *m,
                          size_t i,
                          size_t j,
                          const size_t *set,
                          size_t set_len,
                          size_t pivot_row,
                          char **out);

/**
 * Right quasi-Plücker coordinate of an `n x k` matrix; `set` holds the
 * `k - 1` row labels of `I`. `pivot_col` 0 picks the first defined column.
 *
 * # Safety
 * As for [`qd_left_qpc`].
 */
enum QdStatus qd_right_qpc(const struct QdMatrix *m,
                           size_t i,
                           size_t j,
                           const size_t *set,
                           size_t set_len,
                           size_t pivot_col,
                           char **out);

/**
 * Run the identity catalog. `only` is a comma-separated ID list or null for
 * all; `samples` 0 means the default. Writes the JSON report and the exit
 * code (0 pass, 1 counterexample, 2 domain exhausted).
 *
 * # Safety
 * `only` is null or NUL-terminated; `report_json` and `exit_code` must be
 * writable.
 */
enum QdStatus qd_verify(const char *only,
                        size_t samples,
                        uint64_t seed,
                        char **report_json,
                        int32_t *exit_code);

/**
 * JSON array of `{"id", "reference", "anchor", "module"}` objects.
 *
 * # Safety
 * `out` must be writable.
 */
enum QdStatus qd_list_identities(char **out);

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *qd_last_error_message(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void qd_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUASIDET_H */
