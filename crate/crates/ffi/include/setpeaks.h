#ifndef SETPEAKS_H
#define SETPEAKS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Bumped whenever a signature or struct layout below changes.
 */
#define SETPEAKS_ABI_VERSION 1

/**
 * Generating function selector: symmetric (`SP`) or non-symmetric (`NSP`) peaks.
 */
typedef enum SetpeaksGf {
  SETPEAKS_GF_SP = 0,
  SETPEAKS_GF_NSP = 1,
} SetpeaksGf;

typedef enum SetpeaksMethod {
  SETPEAKS_METHOD_CLOSED = 0,
  SETPEAKS_METHOD_BRUTE = 1,
  SETPEAKS_METHOD_SERIES = 2,
} SetpeaksMethod;

typedef enum SetpeaksStatistic {
  SETPEAKS_STATISTIC_SYMMETRIC = 0,
  SETPEAKS_STATISTIC_NON_SYMMETRIC = 1,
  SETPEAKS_STATISTIC_PEAKS = 2,
} SetpeaksStatistic;

typedef enum SetpeaksStatus {
  SETPEAKS_STATUS_OK = 0,
  SETPEAKS_STATUS_NULL_POINTER = 1,
  SETPEAKS_STATUS_INVALID_ARGUMENT = 2,
  SETPEAKS_STATUS_OUT_OF_RANGE = 3,
  SETPEAKS_STATUS_PANIC = 4,
} SetpeaksStatus;

/**
 * Opaque streaming generator over one partition class.
 */
typedef struct SetpeaksRgsIter SetpeaksRgsIter;

/**
 * Opaque truncated generating function.
 */
typedef struct SetpeaksSeries SetpeaksSeries;

typedef struct SetpeaksStatBundle {
  uint64_t peaks;
  uint64_t symmetric_peaks;
  uint64_t non_symmetric_peaks;
  uint64_t rises;
  uint64_t descents;
  uint64_t records;
} SetpeaksStatBundle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

uint32_t setpeaks_abi_version(void);

/**
 * Message for the last failed call on this thread. The pointer stays valid
 * until the next failing call on the same thread; never free it.
 */
const char *setpeaks_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void setpeaks_string_free(char *s);

/**
 * # Safety
 * `letters` must point to `len` readable values (or be null when `len == 0`);
 * `out` must be writable.
 */
enum SetpeaksStatus setpeaks_word_stats(const uint32_t *letters,
                                        size_t len,
                                        struct SetpeaksStatBundle *out);

/**
 * # Safety
 * Same pointer rules as [`setpeaks_word_stats`].
 */
enum SetpeaksStatus setpeaks_validate_rgs(const uint32_t *letters, size_t len, bool *out);

/**
 * `S(n, k)` as a decimal string.
 *
 * # Safety
 * `out` must be writable; free the result with [`setpeaks_string_free`].
 */
enum SetpeaksStatus setpeaks_stirling2(size_t n, size_t k, char **out);

/**
 * A peak total over partitions of `[n]` with `k` blocks, as a decimal string.
 *
 * # Safety
 * `out` must be writable; free the result with [`setpeaks_string_free`].
 */
enum SetpeaksStatus setpeaks_total(enum SetpeaksStatistic stat,
                                   enum SetpeaksMethod method,
                                   size_t n,
                                   size_t k,
                                   char **out);

/**
 * The aggregate record of one class as a JSON object.
 *
 * # Safety
 * `out` must be writable; free the result with [`setpeaks_string_free`].
 */
enum SetpeaksStatus setpeaks_aggregate_json(size_t n, size_t k, char **out);

/**
 * Rows of the Stirling triangle, tab separated, one line per `n`.
 *
 * # Safety
 * `out` must be writable; free the result with [`setpeaks_string_free`].
 */
enum SetpeaksStatus setpeaks_stirling_table_tsv(size_t max_n, char **out);

/**
 * Creates a generator over the restricted growth strings of length `n` with `k` blocks.
 *
 * # Safety
 * `out` must be writable; release the handle with [`setpeaks_rgs_iter_free`].
 */
enum SetpeaksStatus setpeaks_rgs_iter_new(size_t n, size_t k, struct SetpeaksRgsIter **out);

/**
 * Copies the next word (1-based letters) into `buf`, which must hold at least
 * `n` values. Sets `*has_word` to false once the class is exhausted.
 *
 * # Safety
 * `iter` must be a live handle; `buf` must be writable for `buf_len` values.
 */
enum SetpeaksStatus setpeaks_rgs_iter_next(struct SetpeaksRgsIter *iter,
                                           uint32_t *buf,
                                           size_t buf_len,
                                           bool *has_word);

/**
 * # Safety
 * `iter` must come from [`setpeaks_rgs_iter_new`] and not be used afterwards.
 */
void setpeaks_rgs_iter_free(struct SetpeaksRgsIter *iter);

/**
 * Builds the truncated series of `gf` for `k` blocks through `x^order`.
 * With `derivative`, builds the univariate `q`-derivative at `q = 1` instead.
 *
 * # Safety
 * `out` must be writable; release the handle with [`setpeaks_series_free`].
 */
enum SetpeaksStatus setpeaks_series_new(enum SetpeaksGf gf,
                                        size_t k,
                                        size_t order,
                                        bool derivative,
                                        struct SetpeaksSeries **out);

/**
 * # Safety
 * `series` must be a live handle and `out` writable.
 */
enum SetpeaksStatus setpeaks_series_order(const struct SetpeaksSeries *series, size_t *out);

/**
 * Coefficient of `x^n` as space-separated decimal coefficients of
 * `q^0, q^1, ...` (`"0"` for zero); a single number for derivative series.
 *
 * # Safety
 * `series` must be a live handle and `out` writable; free the result with
 * [`setpeaks_string_free`].
 */
enum SetpeaksStatus setpeaks_series_coeff(const struct SetpeaksSeries *series,
                                          size_t n,
                                          char **out);

/**
 * # Safety
 * `series` must come from [`setpeaks_series_new`] and not be used afterwards.
 */
void setpeaks_series_free(struct SetpeaksSeries *series);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SETPEAKS_H */
