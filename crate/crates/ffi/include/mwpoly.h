#ifndef MWPOLY_H
#define MWPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result codes.
 */
typedef enum MwStatus {
  MW_STATUS_OK = 0,
  MW_STATUS_NULL_POINTER = 1,
  MW_STATUS_PARSE = 2,
  MW_STATUS_DOMAIN = 3,
  MW_STATUS_DIVISION_BY_ZERO = 4,
  MW_STATUS_UNVERIFIABLE = 5,
  MW_STATUS_NOT_PRIMITIVE = 6,
  MW_STATUS_NOT_SQUAREFREE = 7,
  MW_STATUS_INVALID_ARGUMENT = 8,
  MW_STATUS_INDEX_OUT_OF_RANGE = 9,
  MW_STATUS_PANIC = 10,
} MwStatus;

/*
 Opaque list of verified trinomial hits `(g, f, h)` with `g = f * h`.
 */
typedef struct MwHitList MwHitList;

/*
 Opaque polynomial over GF(2).
 */
typedef struct MwPoly MwPoly;

/*
 Message for the last failed call on this thread. Valid until the next
 call into this library from the same thread; never NULL.
 */
const char *mw_last_error_message(void);

/*
 Static description of a status code.
 */
const char *mw_status_str(enum MwStatus status);

/*
 Releases a string returned by this library.

 # Safety
 `s` must come from this library and not have been freed, or be NULL.
 */
void mw_string_free(char *s);

/*
 Parses `x^5+x^4+1`, `0x31` or `mw:7,2`.

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
enum MwStatus mw_poly_parse(const char *text, struct MwPoly **out);

/*
 Polynomial with coefficient bits `bits` (bit i = x^i).

 # Safety
 `out` must be writable.
 */
enum MwStatus mw_poly_from_u64(uint64_t bits, struct MwPoly **out);

/*
 Expansion of the maximum-weight polynomial `MW(m, l)`.

 # Safety
 `out` must be writable.
 */
enum MwStatus mw_poly_maxweight(uint32_t m, uint32_t l, struct MwPoly **out);

/*
 # Safety
 `p` must be a live handle from this library, or NULL.
 */
void mw_poly_free(struct MwPoly *p);

/*
 # Safety
 `p` must be a live handle; `out` writable.
 */
enum MwStatus mw_poly_clone(const struct MwPoly *p, struct MwPoly **out);

/*
 Text form such as `x^5+x^4+1`; free with [`mw_string_free`].

 # Safety
 `p` must be a live handle; `out` writable.
 */
enum MwStatus mw_poly_to_string(const struct MwPoly *p, char **out);

/*
 Hex form such as `0x31`; free with [`mw_string_free`].

 # Safety
 `p` must be a live handle; `out` writable.
 */
enum MwStatus mw_poly_to_hex(const struct MwPoly *p, char **out);

/*
 Degree, -1 for the zero polynomial (and for a NULL handle).

 # Safety
 `p` must be a live handle or NULL.
 */
int64_t mw_poly_degree(const struct MwPoly *p);

/*
 Number of nonzero coefficients (0 for a NULL handle).

 # Safety
 `p` must be a live handle or NULL.
 */
size_t mw_poly_weight(const struct MwPoly *p);

/*
 Whether two polynomials are equal; false if either handle is NULL.

 # Safety
 `a` and `b` must be live handles or NULL.
 */
bool mw_poly_equal(const struct MwPoly *a, const struct MwPoly *b);

/*
 # Safety
 `a`, `b` live handles; `out` writable.
 */
enum MwStatus mw_poly_add(const struct MwPoly *a, const struct MwPoly *b, struct MwPoly **out);

/*
 # Safety
 `a`, `b` live handles; `out` writable.
 */
enum MwStatus mw_poly_mul(const struct MwPoly *a, const struct MwPoly *b, struct MwPoly **out);

/*
 Quotient and remainder of `a / d`.

 # Safety
 `a`, `d` live handles; `quot` and `rem` writable.
 */
enum MwStatus mw_poly_divrem(const struct MwPoly *a,
                             const struct MwPoly *d,
                             struct MwPoly **quot,
                             struct MwPoly **rem);

/*
 # Safety
 `a`, `b` live handles; `out` writable.
 */
enum MwStatus mw_poly_gcd(const struct MwPoly *a, const struct MwPoly *b, struct MwPoly **out);

/*
 `x^e mod f`.

 # Safety
 `f` live handle; `out` writable.
 */
enum MwStatus mw_poly_powmod_x(uint64_t e, const struct MwPoly *f, struct MwPoly **out);

/*
 # Safety
 `p` live handle; `out` writable.
 */
enum MwStatus mw_poly_reciprocal(const struct MwPoly *p, struct MwPoly **out);

/*
 # Safety
 `f` live handle; `out` writable.
 */
enum MwStatus mw_is_irreducible(const struct MwPoly *f, bool *out);

/*
 Returns [`MwStatus::Unverifiable`] when `2^m - 1` cannot be factored.

 # Safety
 `f` live handle; `out` writable.
 */
enum MwStatus mw_is_primitive(const struct MwPoly *f, bool *out);

/*
 Period of `f`. `*found` is false when the brute-force search hit `cap`.

 # Safety
 `f` live handle; `out` and `found` writable.
 */
enum MwStatus mw_period(const struct MwPoly *f, uint64_t cap, uint64_t *out, bool *found);

/*
 Canonical trinomial multiples `x^a + x^b + 1` of `f` with `a <= max_deg`.

 # Safety
 `f` live handle; `out` writable.
 */
enum MwStatus mw_trinomial_multiples(const struct MwPoly *f,
                                     size_t max_deg,
                                     struct MwHitList **out);

/*
 The exception table recomputed by exhaustive search.

 # Safety
 `out` writable.
 */
enum MwStatus mw_verify_table1(struct MwHitList **out);

/*
 Number of hits; 0 for NULL.

 # Safety
 `list` live handle or NULL.
 */
size_t mw_hit_list_len(const struct MwHitList *list);

/*
 Copies hit `index` into three new handles; any of `g`, `f`, `h` may be
 NULL to skip it.

 # Safety
 `list` live handle; non-NULL outputs writable.
 */
enum MwStatus mw_hit_list_get(const struct MwHitList *list,
                              size_t index,
                              struct MwPoly **g,
                              struct MwPoly **f,
                              struct MwPoly **h);

/*
 # Safety
 `list` must be a live handle or NULL.
 */
void mw_hit_list_free(struct MwHitList *list);

/*
 Runs the sweep over odd `m` in `[m_min, m_max]`, `m_min > 7`.

 # Safety
 `pairs_checked` and `hits` writable.
 */
enum MwStatus mw_corollary1_sweep(uint32_t m_min,
                                  uint32_t m_max,
                                  size_t jobs,
                                  size_t *pairs_checked,
                                  size_t *hits);

/*
 Writes `len` sequence bits into `stream`.

 # Safety
 `f` live handle; `seed` readable for `seed_len` bytes; `stream` writable
 for `len` bytes.
 */
enum MwStatus mw_lfsr_generate(const struct MwPoly *f,
                               const uint8_t *seed,
                               size_t seed_len,
                               size_t len,
                               uint8_t *stream);

/*
 Checks the three-term identity for primitive `MW(m, l)` over
 `n = 1..=horizon`. A NULL `seed` with `seed_len` 0 selects the impulse.

 # Safety
 `seed` readable for `seed_len` bytes; `out` writable.
 */
enum MwStatus mw_prop2_check(uint32_t m,
                             uint32_t l,
                             const uint8_t *seed,
                             size_t seed_len,
                             size_t horizon,
                             bool *out);

/*
 Dual-code strength of `C_n^f`: minimum weight of multiples of `f` below
 degree `n`, minus one. `witness` (may be NULL) receives a lightest
 multiple.

 # Safety
 `f` live handle; `strength` and `min_weight` writable.
 */
enum MwStatus mw_strength_dual(const struct MwPoly *f,
                               size_t n,
                               size_t *strength,
                               size_t *min_weight,
                               struct MwPoly **witness);

/*
 Strength of `C_n^f` by direct counting, capped at `t_max`. A NULL
 `seed` with `seed_len` 0 selects the impulse.

 # Safety
 `f` live handle; `seed` readable for `seed_len` bytes; `out` writable.
 */
enum MwStatus mw_strength_direct(const struct MwPoly *f,
                                 size_t n,
                                 const uint8_t *seed,
                                 size_t seed_len,
                                 size_t t_max,
                                 size_t *out);

#endif  /* MWPOLY_H */
