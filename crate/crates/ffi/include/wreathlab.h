#ifndef WREATHLAB_H
#define WREATHLAB_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every function in this interface.
 */
typedef enum WlStatus {
  WL_STATUS_OK = 0,
  WL_STATUS_NULL_POINTER = 1,
  WL_STATUS_INVALID_UTF8 = 2,
  WL_STATUS_PARSE = 3,
  WL_STATUS_INVALID_ARGUMENT = 4,
  WL_STATUS_MISMATCH = 5,
  WL_STATUS_LIMIT_EXCEEDED = 6,
  WL_STATUS_HYPOTHESIS = 7,
  WL_STATUS_INTERNAL = 8,
} WlStatus;

/**
 * An element of the semidirect product Z x| Z^n with a fixed rank and sign variant.
 */
typedef struct WlH WlH;

/**
 * An element of an iterated wreath product together with its signature.
 */
typedef struct WlTree WlTree;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null if none.
 * The pointer stays valid until the next failing call on this thread.
 */
const char *wl_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void wl_string_free(char *s);

/**
 * Parses a tableau literal such as `[1; 0,2]` under a signature such as `2x3`.
 *
 * # Safety
 * String arguments must be nul-terminated; `out` must be writable.
 */
enum WlStatus wl_tree_parse(const char *sig, const char *literal, struct WlTree **out);

/**
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum WlStatus wl_tree_mul(const struct WlTree *a, const struct WlTree *b, struct WlTree **out);

/**
 * # Safety
 * `a` must be live; `out` must be writable.
 */
enum WlStatus wl_tree_inv(const struct WlTree *a, struct WlTree **out);

/**
 * # Safety
 * `a` must be live; `out` must be writable.
 */
enum WlStatus wl_tree_order(const struct WlTree *a, uint64_t *out);

/**
 * Writes the literal form of `a`; release it with [`wl_string_free`].
 *
 * # Safety
 * `a` must be live; `out` must be writable.
 */
enum WlStatus wl_tree_format(const struct WlTree *a, char **out);

/**
 * # Safety
 * `a` must be null or a handle from this library, not yet freed.
 */
void wl_tree_free(struct WlTree *a);

/**
 * Parses a pair literal such as `(1; 0,-2)` of rank `n`.
 *
 * # Safety
 * `literal` must be nul-terminated; `out` must be writable.
 */
enum WlStatus wl_h_parse(const char *literal, size_t n, bool signed_variant, struct WlH **out);

/**
 * Evaluates a word such as `r t1^2 r^-1` to its normal form.
 *
 * # Safety
 * `word` must be nul-terminated; `out` must be writable.
 */
enum WlStatus wl_h_normalize(const char *word, size_t n, bool signed_variant, struct WlH **out);

/**
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum WlStatus wl_h_mul(const struct WlH *a, const struct WlH *b, struct WlH **out);

/**
 * # Safety
 * `a` must be live; `out` must be writable.
 */
enum WlStatus wl_h_is_central(const struct WlH *a, bool *out);

/**
 * # Safety
 * `a` must be live; `out` must be writable.
 */
enum WlStatus wl_h_format(const struct WlH *a, char **out);

/**
 * # Safety
 * `a` must be null or a handle from this library, not yet freed.
 */
void wl_h_free(struct WlH *a);

/**
 * Runs the self-check battery and writes its report as a JSON array.
 * `passed` receives whether no check failed.
 *
 * # Safety
 * Output pointers must be writable.
 */
enum WlStatus wl_verify_all_json(bool full, char **out, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WREATHLAB_H */
