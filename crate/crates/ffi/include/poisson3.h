#ifndef POISSON3_H
#define POISSON3_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum P3Status {
  P3_STATUS_OK = 0,
  P3_STATUS_NULL_POINTER = 1,
  P3_STATUS_INVALID_UTF8 = 2,
  P3_STATUS_PARSE = 3,
  P3_STATUS_INVALID_PARAMETER = 4,
  P3_STATUS_UNKNOWN_ALGEBRA = 5,
  P3_STATUS_UNKNOWN_ID = 6,
  P3_STATUS_OUT_OF_RANGE = 7,
  P3_STATUS_ENGINE = 8,
  P3_STATUS_PANIC = 9,
} P3Status;

/**
 * An algebra from the registry, with its linear Poisson bivector.
 */
typedef struct P3Algebra P3Algebra;

/**
 * A computed cohomology table.
 */
typedef struct P3Table P3Table;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next failing call on the same thread; do not free.
 */
const char *p3_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void p3_string_free(char *s);

/**
 * Looks up an algebra by name (`"heisenberg"`, `"book"`, ...). `tau` is
 * `"p/q"` for `book` and `spiral` and null otherwise.
 *
 * # Safety
 * `name` and `tau` are null or nul-terminated; `out` is valid for writes.
 */
enum P3Status p3_algebra_new(const char *name, const char *tau, struct P3Algebra **out);

/**
 * # Safety
 * `alg` is null or a live handle.
 */
void p3_algebra_free(struct P3Algebra *alg);

/**
 * The linear Poisson bivector, formatted.
 *
 * # Safety
 * `alg` is a live handle; `out` is valid for writes.
 */
enum P3Status p3_algebra_bivector(const struct P3Algebra *alg, char **out);

/**
 * `d_π(expr)` for the bivector of `alg`.
 *
 * # Safety
 * `alg` is a live handle, `expr` nul-terminated, `out` valid for writes.
 */
enum P3Status p3_poisson_differential(const struct P3Algebra *alg, const char *expr, char **out);

/**
 * Schouten bracket of two expressions.
 *
 * # Safety
 * `a` and `b` are nul-terminated; `out` is valid for writes.
 */
enum P3Status p3_schouten(const char *a, const char *b, char **out);

/**
 * Cohomology table of `alg` in degrees `0..=dmax`.
 *
 * # Safety
 * `alg` is a live handle; `out` is valid for writes.
 */
enum P3Status p3_table_compute(const struct P3Algebra *alg, uint32_t dmax, struct P3Table **out);

/**
 * # Safety
 * `table` is null or a live handle.
 */
void p3_table_free(struct P3Table *table);

/**
 * # Safety
 * `table` is a live handle; `out` is valid for writes.
 */
enum P3Status p3_table_dmax(const struct P3Table *table, uint32_t *out);

/**
 * `dim H^q_d`.
 *
 * # Safety
 * `table` is a live handle; `out` is valid for writes.
 */
enum P3Status p3_table_dim(const struct P3Table *table, uint32_t q, uint32_t d, size_t *out);

/**
 * Writes the four totals `H^0..H^3` to `out[0..4]`.
 *
 * # Safety
 * `table` is a live handle; `out` points to 4 writable `size_t`.
 */
enum P3Status p3_table_totals(const struct P3Table *table, size_t *out);

/**
 * The table as a JSON document.
 *
 * # Safety
 * `table` is a live handle; `out` is valid for writes.
 */
enum P3Status p3_table_json(const struct P3Table *table, char **out);

/**
 * Checks the engine against the expected result `id` on degrees `0..=dmax`;
 * `dmax = 0` uses the stored range. `passed` receives 1 or 0, and
 * `report` (if not null) a text report.
 *
 * # Safety
 * `id` is nul-terminated; `passed` is valid for writes; `report` is null or valid for writes.
 */
enum P3Status p3_verify(const char *id, uint32_t dmax, int32_t *passed, char **report);

/**
 * Library version, static; do not free.
 */
const char *p3_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POISSON3_H */
