/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef KNOTCOMM_H
#define KNOTCOMM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; the nonzero values below 6 match the CLI exit codes.
 */
typedef enum KcStatus {
  KC_STATUS_OK = 0,
  KC_STATUS_UNKNOWN_KNOT = 2,
  KC_STATUS_INSUFFICIENT_DATA = 3,
  KC_STATUS_B1_VIOLATION = 5,
  KC_STATUS_ERROR = 6,
  KC_STATUS_NULL_POINTER = 7,
  KC_STATUS_INVALID_ARGUMENT = 8,
  KC_STATUS_PANIC = 9,
} KcStatus;

typedef enum KcVerdict {
  KC_VERDICT_PASS = 0,
  KC_VERDICT_FAIL = 1,
  KC_VERDICT_INCONCLUSIVE = 2,
} KcVerdict;

typedef struct KcCatalog KcCatalog;

typedef struct KcKnot KcKnot;

/**
 * A certified real: the true value lies within `radius` of `mid`.
 */
typedef struct KcBall {
  double mid;
  double radius;
} KcBall;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next failing call on the same thread.
 */
const char *kc_last_error_message(void);

void kc_string_free(char *s);

/**
 * Library version as a static string.
 */
const char *kc_version(void);

/**
 * The built-in catalog. Never NULL.
 */
struct KcCatalog *kc_catalog_builtin(void);

/**
 * Built-ins merged with the catalog file at `path`.
 */
enum KcStatus kc_catalog_load(const char *path, struct KcCatalog **result);

/**
 * Catalog holding exactly the knots of a JSON catalog document.
 */
enum KcStatus kc_catalog_from_json(const char *json, struct KcCatalog **result);

void kc_catalog_free(struct KcCatalog *catalog);

size_t kc_catalog_len(const struct KcCatalog *catalog);

/**
 * Name of the `index`-th knot, or NULL if out of range.
 */
char *kc_catalog_name(const struct KcCatalog *catalog, size_t index);

/**
 * Catalog document as JSON.
 */
char *kc_catalog_export(const struct KcCatalog *catalog);

/**
 * Looks up `name` (a `mirror:` prefix gives the mirror image).
 */
enum KcStatus kc_knot_get(const struct KcCatalog *catalog,
                          const char *name,
                          struct KcKnot **result);

/**
 * Knot from Alexander coefficients (constant term first). `signature` may
 * be NULL.
 */
enum KcStatus kc_knot_from_alexander(const char *name,
                                     const int64_t *coeffs,
                                     size_t len,
                                     const int64_t *signature,
                                     struct KcKnot **result);

/**
 * Knot from a `size x size` Seifert matrix in row-major order.
 */
enum KcStatus kc_knot_from_seifert(const char *name,
                                   const int64_t *entries,
                                   size_t size,
                                   struct KcKnot **result);

void kc_knot_free(struct KcKnot *knot);

/**
 * Mirror image, or NULL if `knot` is NULL. Shares cached invariants.
 */
struct KcKnot *kc_knot_mirror(const struct KcKnot *knot);

char *kc_knot_name(const struct KcKnot *knot);

/**
 * Alexander polynomial, for example `t^2 - 3t + 1`.
 */
char *kc_knot_alexander(const struct KcKnot *knot);

/**
 * τ(K), the log Mahler measure of Δ.
 */
enum KcStatus kc_knot_tau(const struct KcKnot *knot, struct KcBall *result);

/**
 * ρ(K), the integral of the signature function over the circle.
 */
enum KcStatus kc_knot_rho(const struct KcKnot *knot, struct KcBall *result);

enum KcStatus kc_knot_signature(const struct KcKnot *knot, int64_t *result);

/**
 * Σ σ(K, e^{2πik/n}) over k = 1..n.
 */
enum KcStatus kc_knot_signature_sum(const struct KcKnot *knot, uint64_t n, int64_t *result);

/**
 * Order of the torsion of H_1 of the n-fold cyclic cover as a decimal
 * string ("0" when infinite), or NULL on error.
 */
char *kc_knot_torsion_order(const struct KcKnot *knot, uint64_t n);

enum KcStatus kc_knot_b1(const struct KcKnot *knot, uint64_t n, uint64_t *result);

enum KcStatus kc_knot_admissible(const struct KcKnot *knot, bool *result);

/**
 * Overall verdict of the τ and ρ equations for covers `n1` and `n2`.
 * `epsilon` is 1, -1, or 0 for both orientations.
 */
enum KcStatus kc_cover_pair_test(const struct KcKnot *k1,
                                 uint64_t n1,
                                 const struct KcKnot *k2,
                                 uint64_t n2,
                                 int32_t epsilon,
                                 enum KcVerdict *result);

/**
 * Exact root-power multiset test for covers `n1` and `n2`.
 */
enum KcStatus kc_multiset_power_test(const struct KcKnot *k1,
                                     uint64_t n1,
                                     const struct KcKnot *k2,
                                     uint64_t n2,
                                     enum KcVerdict *result);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* KNOTCOMM_H */
