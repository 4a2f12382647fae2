#ifndef TENEIG_H
#define TENEIG_H

/* Generated by cbindgen from teneig-ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Call outcome. Values 1..=4 mirror the CLI exit codes.
 */
enum TeneigStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  TENEIG_STATUS_OK = 0,
  /**
   * Numeric failure (ill-conditioning, nonpositive invariants, ...).
   */
  TENEIG_STATUS_NUMERIC = 1,
  /**
   * The input text does not parse.
   */
  TENEIG_STATUS_PARSE = 2,
  /**
   * Parsed but invalid (bad indices, missing determinant, bad parameter).
   */
  TENEIG_STATUS_VALIDATION = 3,
  /**
   * The operation has no exact path for this tensor shape.
   */
  TENEIG_STATUS_UNSUPPORTED = 4,
  /**
   * A required pointer argument was null.
   */
  TENEIG_STATUS_NULL_ARGUMENT = 5,
  /**
   * The output buffer capacity is too small; the required size was
   * written to the count output.
   */
  TENEIG_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * Internal panic caught at the boundary.
   */
  TENEIG_STATUS_PANIC = 7,
};
#ifndef __cplusplus
typedef int32_t TeneigStatus;
#endif // __cplusplus

/**
 * Definiteness verdict of [`teneig_certify`].
 */
enum TeneigVerdict
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  TENEIG_VERDICT_INCONCLUSIVE = 0,
  TENEIG_VERDICT_CERTIFIED_PD = 1,
  TENEIG_VERDICT_CERTIFIED_NOT_PD = 2,
};
#ifndef __cplusplus
typedef int32_t TeneigVerdict;
#endif // __cplusplus

/**
 * Opaque tensor handle.
 */
typedef struct TeneigTensor TeneigTensor;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message for this thread, NUL-terminated. The pointer stays
 * valid until the next failing call on the same thread. Never null.
 */
const char *teneig_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *teneig_version(void);

/**
 * Parse the text tensor format (same as the CLI input files) and return a
 * new handle through `out`. The handle must be released with
 * [`teneig_free`].
 *
 * # Safety
 * `text` must point to a NUL-terminated string; `out` must be valid.
 */
TeneigStatus teneig_parse(const char *text, struct TeneigTensor **out);

/**
 * Release a handle. Null is ignored.
 *
 * # Safety
 * `t` must be a pointer returned by [`teneig_parse`], released at most once.
 */
void teneig_free(struct TeneigTensor *t);

/**
 * Tensor order m, or 0 if the handle is null.
 *
 * # Safety
 * `t` must be a live handle or null.
 */
uint32_t teneig_order(const struct TeneigTensor *t);

/**
 * Tensor dimension n, or 0 if the handle is null.
 *
 * # Safety
 * `t` must be a live handle or null.
 */
uint32_t teneig_dim(const struct TeneigTensor *t);

/**
 * Sum of diagonal entries.
 *
 * # Safety
 * `t` must be a live handle; `out` must be valid.
 */
TeneigStatus teneig_trace(const struct TeneigTensor *t, double *out);

/**
 * Exact determinant (product of all characteristic roots), available for
 * n = 2 or m = 2.
 *
 * # Safety
 * `t` must be a live handle; `out` must be valid.
 */
TeneigStatus teneig_determinant(const struct TeneigTensor *t, double *out);

/**
 * Distinct real characteristic roots, descending, with multiplicities.
 *
 * Writes at most `capacity` clusters into `values` / `multiplicities` and
 * the total cluster count into `count`. If `capacity` is too small,
 * returns `BUFFER_TOO_SMALL` with the required size in `count`.
 * `complex_count` (optional, may be null) receives the number of
 * characteristic roots that are not real.
 *
 * # Safety
 * `t` must be a live handle; `values` and `multiplicities` must hold
 * `capacity` elements (may be null when `capacity` is 0); `count` must be
 * valid.
 */
TeneigStatus teneig_spectrum(const struct TeneigTensor *t,
                             double *values,
                             uint32_t *multiplicities,
                             size_t capacity,
                             size_t *count,
                             size_t *complex_count);

/**
 * Hull of the Gershgorin disk union; every real H-eigenvalue lies inside.
 *
 * # Safety
 * `t` must be a live handle; `lower` and `upper` must be valid.
 */
TeneigStatus teneig_gershgorin_interval(const struct TeneigTensor *t, double *lower, double *upper);

/**
 * Best invariant-based upper bound on the largest eigenvalue.
 *
 * `external_determinant` supplies the determinant for shapes without an
 * exact path (n >= 3 with m >= 3); pass NAN to require the exact one.
 *
 * # Safety
 * `t` must be a live handle; `out` must be valid.
 */
TeneigStatus teneig_lambda_max_upper(const struct TeneigTensor *t,
                                     double external_determinant,
                                     double *out);

/**
 * Positive definiteness verdict for the form A x^m.
 *
 * # Safety
 * `t` must be a live handle; `verdict` must be valid.
 */
TeneigStatus teneig_certify(const struct TeneigTensor *t, TeneigVerdict *verdict);

/**
 * Lyapunov check of V(x) = A x^m for the gradient flow x' = -grad V over
 * `samples` seeded unit-sphere points. `stable` receives 1 or 0;
 * `max_vdot` (optional, may be null) the largest sampled derivative.
 *
 * # Safety
 * `t` must be a live handle; `stable` must be valid.
 */
TeneigStatus teneig_lyapunov_stable(const struct TeneigTensor *t,
                                    size_t samples,
                                    uint64_t seed,
                                    int32_t *stable,
                                    double *max_vdot);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TENEIG_H */
