#ifndef HYPERCERT_H
#define HYPERCERT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum HcStatus {
  HC_STATUS_OK = 0,
  HC_STATUS_NULL_POINTER = 1,
  HC_STATUS_INVALID_UTF8 = 2,
  HC_STATUS_PARSE_ERROR = 3,
  HC_STATUS_INVALID_ARGUMENT = 4,
  HC_STATUS_BUFFER_TOO_SMALL = 5,
  HC_STATUS_INVARIANT = 6,
  HC_STATUS_PANIC = 7,
} HcStatus;

/**
 * Outcome of [`hc_variety_classify`].
 */
typedef enum HcClassKind {
  HC_CLASS_KIND_HYPERBOLIC = 0,
  HC_CLASS_KIND_CONTAINS_LINES = 1,
  HC_CLASS_KIND_OPEN_GAP = 2,
  HC_CLASS_KIND_LOW_DIMENSION = 3,
} HcClassKind;

/**
 * Opaque handle to a parsed variety.
 */
typedef struct HcVariety HcVariety;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after success.
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *hc_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *hc_version(void);

/**
 * Parses a specification such as `Gr(2,4)xP(2)` into a new handle.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a writable pointer.
 */
enum HcStatus hc_variety_parse(const char *name, struct HcVariety **out);

/**
 * Releases a handle from [`hc_variety_parse`]. NULL is ignored.
 *
 * # Safety
 * `v` must be NULL or a handle not yet freed.
 */
void hc_variety_free(struct HcVariety *v);

/**
 * Dimension `D`; 0 for a NULL handle.
 *
 * # Safety
 * `v` must be NULL or a live handle.
 */
uint32_t hc_variety_dimension(const struct HcVariety *v);

/**
 * Picard rank `m`; 0 for a NULL handle.
 *
 * # Safety
 * `v` must be NULL or a live handle.
 */
size_t hc_variety_picard_rank(const struct HcVariety *v);

/**
 * Writes the canonical coefficients, hyperbolicity thresholds and lines
 * thresholds into caller arrays of length `len >= m`. Any output pointer
 * may be NULL to skip it.
 *
 * # Safety
 * `v` must be a live handle; non-NULL arrays must hold `len` elements.
 */
enum HcStatus hc_variety_thresholds(const struct HcVariety *v,
                                    int64_t *canonical,
                                    int64_t *hyperbolic,
                                    int64_t *lines,
                                    size_t len);

/**
 * Classifies a very general hypersurface of multidegree `degrees[0..len]`.
 * `index` receives the 1-based witness for `CONTAINS_LINES`, the first
 * 1-based open index for `OPEN_GAP`, and 0 otherwise; it may be NULL.
 *
 * # Safety
 * `v` must be a live handle, `degrees` must hold `len` values and `kind`
 * must be writable.
 */
enum HcStatus hc_variety_classify(const struct HcVariety *v,
                                  const uint32_t *degrees,
                                  size_t len,
                                  enum HcClassKind *kind,
                                  size_t *index);

/**
 * Full hyperbolicity certificate as JSON (same document as
 * `hypercert certify --json`).
 *
 * # Safety
 * `v` must be a live handle, `degrees` must hold `len` values and `out`
 * must be writable.
 */
enum HcStatus hc_certify_json(const struct HcVariety *v,
                              const uint32_t *degrees,
                              size_t len,
                              char **out);

/**
 * Lines on a general hypersurface of degree `2n-3` in `P^n`, in decimal.
 *
 * # Safety
 * `out` must be writable.
 */
enum HcStatus hc_line_count(uint32_t n, char **out);

/**
 * Fano-scheme class report for degree `d` in `G(2,N)` as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum HcStatus hc_fano_class_json(uint32_t d, uint32_t big_n, char **out);

/**
 * Product of two elements of the Chow ring of `G(k,n)` written as text,
 * e.g. `"s[2,1] + 3*s[1]"`; the result uses the same syntax.
 *
 * # Safety
 * `x` and `y` must be NUL-terminated strings and `out` writable.
 */
enum HcStatus hc_schubert_multiply(uint32_t k,
                                   uint32_t n,
                                   const char *x,
                                   const char *y,
                                   char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void hc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERCERT_H */
