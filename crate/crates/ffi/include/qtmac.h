#ifndef QTMAC_H
#define QTMAC_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QtmacStatus {
  QTMAC_STATUS_OK = 0,
  QTMAC_STATUS_NULL_POINTER = 1,
  QTMAC_STATUS_INVALID_UTF8 = 2,
  QTMAC_STATUS_PARSE_ERROR = 3,
  QTMAC_STATUS_INVALID_ARGUMENT = 4,
  QTMAC_STATUS_NOT_COPRIME = 5,
  QTMAC_STATUS_BAD_REARRANGEMENT = 6,
  QTMAC_STATUS_COMPUTATION_FAILED = 7,
  QTMAC_STATUS_PANIC = 8,
} QtmacStatus;

typedef enum QtmacHlVariant {
  QTMAC_HL_VARIANT_ROOT = 0,
  QTMAC_HL_VARIANT_WEIGHT = 1,
} QtmacHlVariant;

/**
 * A Schur expansion with coefficients in `Z[q^±1, t^±1]`.
 */
typedef struct QtmacExpansion QtmacExpansion;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Computes `H~_mu`. `mu` and `beta` are comma separated parts such as `"2,1"`.
 *
 * # Safety
 * `mu` must be a nul-terminated string, `beta` null or nul-terminated, and
 * `out` a valid pointer.
 */
enum QtmacStatus qtmac_hmu(const char *mu, const char *beta, struct QtmacExpansion **out);

/**
 * Computes `H~^{m,n}_mu` for coprime `m, n`.
 *
 * # Safety
 * As for [`qtmac_hmu`].
 */
enum QtmacStatus qtmac_hmn(const char *mu,
                           uint32_t m,
                           uint32_t n,
                           const char *beta,
                           struct QtmacExpansion **out);

/**
 * Computes the integral form `J_mu`.
 *
 * # Safety
 * As for [`qtmac_hmu`].
 */
enum QtmacStatus qtmac_jmu(const char *mu, const char *beta, struct QtmacExpansion **out);

/**
 * Computes the Hall-Littlewood polynomial `H_mu(X; t)`.
 *
 * # Safety
 * `mu` must be a nul-terminated string and `out` a valid pointer.
 */
enum QtmacStatus qtmac_hl(const char *mu, enum QtmacHlVariant variant, struct QtmacExpansion **out);

/**
 * Parses an expansion from its JSON form.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum QtmacStatus qtmac_expansion_from_json(const char *json, struct QtmacExpansion **out);

/**
 * Writes the JSON form of `exp` to `*out`. Release it with [`qtmac_string_free`].
 *
 * # Safety
 * `exp` must be a live handle and `out` a valid pointer.
 */
enum QtmacStatus qtmac_expansion_to_json(const struct QtmacExpansion *exp, char **out);

/**
 * Writes the text form of `exp`, e.g. `q*s[2] + s[1,1]`.
 *
 * # Safety
 * As for [`qtmac_expansion_to_json`].
 */
enum QtmacStatus qtmac_expansion_to_string(const struct QtmacExpansion *exp, char **out);

/**
 * Number of Schur terms, or 0 for a null handle.
 *
 * # Safety
 * `exp` must be null or a live handle.
 */
size_t qtmac_expansion_len(const struct QtmacExpansion *exp);

/**
 * Whether two expansions are equal. Null handles compare unequal.
 *
 * # Safety
 * Both arguments must be null or live handles.
 */
bool qtmac_expansion_equal(const struct QtmacExpansion *a, const struct QtmacExpansion *b);

/**
 * Applies the involution omega, returning a new handle.
 *
 * # Safety
 * `exp` must be a live handle and `out` a valid pointer.
 */
enum QtmacStatus qtmac_expansion_omega(const struct QtmacExpansion *exp,
                                       struct QtmacExpansion **out);

/**
 * # Safety
 * `exp` must be null or a handle not yet freed.
 */
void qtmac_expansion_free(struct QtmacExpansion *exp);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void qtmac_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *qtmac_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QTMAC_H */
