#ifndef BCK_CODES_H
#define BCK_CODES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BckKind {
  BCK_KIND_STAR = 0,
  BCK_KIND_DOT = 1,
} BckKind;

// How a code is turned into an algebra.
typedef enum BckMode {
  BCK_MODE_EMBED = 0,
  BCK_MODE_DIRECT = 1,
} BckMode;

typedef enum BckStatus {
  BCK_STATUS_OK = 0,
  BCK_STATUS_NULL_POINTER = 1,
  BCK_STATUS_INVALID_UTF8 = 2,
  BCK_STATUS_FORMAT = 3,
  BCK_STATUS_USAGE = 4,
  BCK_STATUS_INTEGRITY = 5,
  BCK_STATUS_OUT_OF_RANGE = 6,
  BCK_STATUS_PANIC = 7,
} BckStatus;

typedef enum BckSystem {
  BCK_SYSTEM_BCI = 0,
  BCK_SYSTEM_BCK = 1,
  BCK_SYSTEM_HILBERT = 2,
} BckSystem;

// Opaque algebra handle.
typedef struct BckAlgebra BckAlgebra;

typedef struct BckClassification {
  size_t n;
  size_t filter_count;
  size_t maximal_count;
  size_t radical_size;
  bool is_semisimple;
  bool is_local;
  // One-element algebra; both verdicts are false.
  bool degenerate;
} BckClassification;

typedef struct BckCensusSummary {
  size_t n;
  uint64_t total_matrices;
  size_t evaluated;
  size_t class_count;
  uint64_t bound;
  bool bound_met;
} BckCensusSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds the algebra of a code file text.
//
// # Safety
// `code_text` must be a NUL-terminated string and `out` a valid pointer.
enum BckStatus bck_algebra_from_code(const char *code_text,
                                     enum BckMode mode,
                                     struct BckAlgebra **out);

// Parses an algebra file text.
//
// # Safety
// `table_text` must be a NUL-terminated string and `out` a valid pointer.
enum BckStatus bck_algebra_from_table(const char *table_text, struct BckAlgebra **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `alg` must come from this library and not be used afterwards.
void bck_algebra_free(struct BckAlgebra *alg);

// # Safety
// `alg` must be a live handle and `out` a valid pointer.
enum BckStatus bck_algebra_size(const struct BckAlgebra *alg, size_t *out);

// `x ∘ y` for the table's own operation. Element 0 is θ.
//
// # Safety
// `alg` must be a live handle and `out` a valid pointer.
enum BckStatus bck_algebra_op(const struct BckAlgebra *alg, size_t x, size_t y, size_t *out);

// # Safety
// `alg` must be a live handle and `out` a valid pointer.
enum BckStatus bck_algebra_kind(const struct BckAlgebra *alg, enum BckKind *out);

// New handle holding the transposed table.
//
// # Safety
// `alg` must be a live handle and `out` a valid pointer.
enum BckStatus bck_algebra_dualize(const struct BckAlgebra *alg, struct BckAlgebra **out);

// Checks an axiom system against the table; `passed` receives the verdict.
//
// # Safety
// `alg` must be a live handle and `passed` a valid pointer.
enum BckStatus bck_algebra_verify(const struct BckAlgebra *alg,
                                  enum BckSystem system,
                                  bool *passed);

// Semisimple/local classification; star tables are dualized first.
//
// # Safety
// `alg` must be a live handle and `out` a valid pointer.
enum BckStatus bck_algebra_classify(const struct BckAlgebra *alg, struct BckClassification *out);

// The table in algebra-file format. Free the string with
// `bck_string_free`.
//
// # Safety
// `alg` must be a live handle and `out` a valid pointer.
enum BckStatus bck_algebra_to_text(const struct BckAlgebra *alg, char **out);

// # Safety
// `s` must come from `bck_algebra_to_text` and not be used afterwards.
void bck_string_free(char *s);

// Exhaustive census for `n`; `jobs` = 0 uses the default worker count.
//
// # Safety
// `out` must be a valid pointer.
enum BckStatus bck_census(size_t n, size_t jobs, struct BckCensusSummary *out);

// Message of the last failed call on this thread, or null. Valid until
// the next call into this library on the same thread.
const char *bck_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BCK_CODES_H */
