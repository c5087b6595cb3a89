#ifndef ABALG_H
#define ABALG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AbalgOrdering {
  ABALG_ORDERING_LEFT = 0,
  ABALG_ORDERING_RIGHT = 1,
} AbalgOrdering;

typedef enum AbalgStatus {
  ABALG_STATUS_OK = 0,
  ABALG_STATUS_NULL_POINTER = 1,
  ABALG_STATUS_INVALID_UTF8 = 2,
  ABALG_STATUS_PARSE = 3,
  ABALG_STATUS_DOMAIN = 4,
  ABALG_STATUS_JSON = 5,
  ABALG_STATUS_INTERNAL = 6,
} AbalgStatus;

/**
 * Opaque handle to a truncated algebra element.
 */
typedef struct AbalgElement AbalgElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread; do not free.
 */
const char *abalg_last_error(void);

/**
 * # Safety
 * `x` must be null or a handle returned by this library and not yet freed.
 */
void abalg_element_free(struct AbalgElement *x);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void abalg_string_free(char *s);

/**
 * Parses `text` in the algebra truncated at total degree `order`; the result
 * is in left normal form.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum AbalgStatus abalg_parse(const char *text, uint32_t order, struct AbalgElement **out);

/**
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum AbalgStatus abalg_from_json(const char *json, struct AbalgElement **out);

/**
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum AbalgStatus abalg_to_json(const struct AbalgElement *x, char **out);

/**
 * Pretty form in the element's current ordering.
 *
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum AbalgStatus abalg_to_string(const struct AbalgElement *x, char **out);

/**
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum AbalgStatus abalg_to_ordering(const struct AbalgElement *x,
                                   enum AbalgOrdering ordering,
                                   struct AbalgElement **out);

/**
 * # Safety
 * `x`, `y` must be live handles and `out` a valid pointer.
 */
enum AbalgStatus abalg_add(const struct AbalgElement *x,
                           const struct AbalgElement *y,
                           struct AbalgElement **out);

/**
 * # Safety
 * `x`, `y` must be live handles and `out` a valid pointer.
 */
enum AbalgStatus abalg_sub(const struct AbalgElement *x,
                           const struct AbalgElement *y,
                           struct AbalgElement **out);

/**
 * # Safety
 * `x`, `y` must be live handles and `out` a valid pointer.
 */
enum AbalgStatus abalg_mul(const struct AbalgElement *x,
                           const struct AbalgElement *y,
                           struct AbalgElement **out);

/**
 * Writes 1 to `out` when `x` and `y` denote the same element, else 0.
 *
 * # Safety
 * `x`, `y` must be live handles and `out` a valid pointer.
 */
enum AbalgStatus abalg_equal(const struct AbalgElement *x,
                             const struct AbalgElement *y,
                             int32_t *out);

/**
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum AbalgStatus abalg_invert(const struct AbalgElement *x, struct AbalgElement **out);

/**
 * Applies `a -> a + c b`, `b -> b` with `c = re + i im`. Rationals are given
 * as text such as `"-3/4"`; a null `im` means zero.
 *
 * # Safety
 * `x` must be a live handle, `re` a nul-terminated string, `im` null or a
 * nul-terminated string, and `out` a valid pointer.
 */
enum AbalgStatus abalg_tau(const struct AbalgElement *x,
                           const char *re,
                           const char *im,
                           struct AbalgElement **out);

/**
 * The anti-automorphism `a -> a`, `b -> -b`.
 *
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum AbalgStatus abalg_anti_f(const struct AbalgElement *x, struct AbalgElement **out);

/**
 * `x = q (a - λ b) + r` with `r` a series in `b`.
 *
 * # Safety
 * `x` must be a live handle, `re`/`im` as in [`abalg_tau`], and `q`, `r` valid pointers.
 */
enum AbalgStatus abalg_divide_linear(const struct AbalgElement *x,
                                     const char *re,
                                     const char *im,
                                     struct AbalgElement **q,
                                     struct AbalgElement **r);

/**
 * Bernstein polynomial of the simple-pole module with matrix `Θ`, given and
 * returned as JSON (`{"k", "entries"}` in, `{"degree", "coeffs"}` out).
 *
 * # Safety
 * `matrix_json` must be a nul-terminated string and `out` a valid pointer.
 */
enum AbalgStatus abalg_bernstein(const char *matrix_json, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABALG_H */
