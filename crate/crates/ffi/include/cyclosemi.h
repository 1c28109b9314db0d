#ifndef CYCLOSEMI_H
#define CYCLOSEMI_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum CsStatus {
  CS_STATUS_OK = 0,
  CS_STATUS_NULL_POINTER = 1,
  CS_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Generators are empty, contain 0, or have gcd greater than 1.
   */
  CS_STATUS_NOT_NUMERICAL_SEMIGROUP = 3,
  /**
   * The caller's buffer is too short; the required length was written.
   */
  CS_STATUS_BUFFER_TOO_SMALL = 4,
  /**
   * A value does not fit the C type.
   */
  CS_STATUS_OVERFLOW = 5,
  CS_STATUS_NO_CONVERGENCE = 6,
  /**
   * n is below the threshold the check needs.
   */
  CS_STATUS_BELOW_THRESHOLD = 7,
  CS_STATUS_PANIC = 8,
} CsStatus;

/**
 * Opaque semigroup handle.
 */
typedef struct CsSemigroup CsSemigroup;

/**
 * Outcome of the root-modulus band check for the t = 0 family member.
 */
typedef struct CsBandReport {
  uint64_t n;
  double half_width;
  double lower;
  double upper;
  double max_band_violation;
  double max_distance_from_circle;
  bool off_circle_witness;
  bool pass;
} CsBandReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the semigroup generated by `gens[0..len]`.
 *
 * # Safety
 * `gens` must point to `len` readable values and `out` must be writable.
 */
enum CsStatus cs_semigroup_new(const uint64_t *gens, size_t len, struct CsSemigroup **out);

/**
 * Builds the family member S(n, t).
 *
 * # Safety
 * `out` must be writable.
 */
enum CsStatus cs_family_new(uint64_t n, uint64_t t, struct CsSemigroup **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void cs_semigroup_free(struct CsSemigroup *s);

/**
 * Frobenius number; -1 for the semigroup of all naturals.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum CsStatus cs_semigroup_frobenius(const struct CsSemigroup *s, int64_t *out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum CsStatus cs_semigroup_genus(const struct CsSemigroup *s, uint64_t *out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum CsStatus cs_semigroup_embedding_dimension(const struct CsSemigroup *s, uint64_t *out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum CsStatus cs_semigroup_is_symmetric(const struct CsSemigroup *s, bool *out);

/**
 * Whether the semigroup polynomial is a product of cyclotomic polynomials.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum CsStatus cs_semigroup_is_cyclotomic(const struct CsSemigroup *s, bool *out);

/**
 * Copies the semigroup polynomial's coefficients, constant term first, into
 * `buf`. `*len` always receives the coefficient count; if it exceeds `cap`
 * nothing is copied and `BufferTooSmall` is returned. `buf` may be null
 * when `cap` is 0.
 *
 * # Safety
 * `buf` must have room for `cap` values; `s` must be live; `len` writable.
 */
enum CsStatus cs_semigroup_polynomial(const struct CsSemigroup *s,
                                      int64_t *buf,
                                      size_t cap,
                                      size_t *len);

/**
 * Writes the analysis record as a JSON string. Release it with
 * [`cs_string_free`].
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum CsStatus cs_semigroup_analysis_json(const struct CsSemigroup *s, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `p` must come from this library and not be used afterwards.
 */
void cs_string_free(char *p);

/**
 * Whether `coeffs[0..len]` (constant term first) is a product of cyclotomic
 * polynomials. Trailing zeros are ignored; the zero polynomial is an
 * `InvalidArgument`.
 *
 * # Safety
 * `coeffs` must point to `len` readable values and `out` must be writable.
 */
enum CsStatus cs_poly_is_cyclotomic(const int64_t *coeffs, size_t len, bool *out);

/**
 * Root-modulus band check for S(n, 0), n >= 12.
 *
 * # Safety
 * `out` must be writable.
 */
enum CsStatus cs_band_check(uint64_t n, struct CsBandReport *out);

/**
 * Static description of a status code.
 */
const char *cs_status_message(enum CsStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLOSEMI_H */
