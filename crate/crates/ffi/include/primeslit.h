#ifndef PRIMESLIT_H
#define PRIMESLIT_H

/* Generated by cbindgen from crates/ffi/src. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum PsStatus {
  PS_STATUS_OK = 0,
  PS_STATUS_NULL_POINTER = 1,
  PS_STATUS_INVALID_ARGUMENT = 2,
  PS_STATUS_NOT_PRIME = 3,
  PS_STATUS_OUT_OF_RANGE = 4,
  PS_STATUS_PANIC = 5,
} PsStatus;

typedef enum PsPlacement {
  PS_PLACEMENT_CENTERED = 0,
  PS_PLACEMENT_LEFT_ANCHORED = 1,
} PsPlacement;

typedef struct PsArrangement PsArrangement;

/**
 * Evaluation tolerances.
 */
typedef struct PsConfig PsConfig;

typedef struct PsFactorization PsFactorization;

/**
 * An owned, increasing list of primes.
 */
typedef struct PsPrimeList PsPrimeList;

/**
 * Plain-data copy of a zeta identity check.
 */
typedef struct PsZetaReport {
  double s;
  uint64_t n_terms;
  double partial_sum;
  double target;
  double gap;
} PsZetaReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *ps_version(void);

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *ps_last_error_message(void);

/**
 * Handle with the default tolerances. Never NULL.
 */
struct PsConfig *ps_config_default(void);

/**
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum PsStatus ps_config_new(double singularity_window,
                            double zero_threshold,
                            double integer_snap,
                            struct PsConfig **out);

/**
 * # Safety
 * `cfg` must be NULL or a handle not yet freed.
 */
void ps_config_free(struct PsConfig *cfg);

/**
 * Writes 1 to `out` when `p` divides `n` (including `n = 0`), else 0.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum PsStatus ps_intensity_exact(uint64_t p, int64_t n, uint8_t *out);

/**
 * # Safety
 * `cfg` must be NULL (defaults) or a live handle; `out` valid for a write.
 */
enum PsStatus ps_intensity_float(const struct PsConfig *cfg, uint64_t p, double x, double *out);

/**
 * Count of the listed slit sizes dividing `n`.
 *
 * # Safety
 * `primes` must point to `len` values; `out` valid for a write.
 */
enum PsStatus ps_omega_m_exact(const uint64_t *primes, size_t len, int64_t n, uint32_t *out);

/**
 * Floating partial sum over a gap-free seed `{2, 3, ..., p_m}`.
 *
 * # Safety
 * `cfg` NULL or live; `primes` points to `len` values; `out` valid for a write.
 */
enum PsStatus ps_omega_m_float(const struct PsConfig *cfg,
                               const uint64_t *primes,
                               size_t len,
                               double x,
                               double *out);

/**
 * Incoherent sum of kernels for arbitrary slit sizes, no seed validation.
 *
 * # Safety
 * `cfg` NULL or live; `sizes` points to `len` values; `out` valid for a write.
 */
enum PsStatus ps_superpose_float(const struct PsConfig *cfg,
                                 const uint64_t *sizes,
                                 size_t len,
                                 double x,
                                 double *out);

/**
 * Distinct prime factors of `n ≥ 1` from the interference series.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum PsStatus ps_omega_series(uint64_t n, uint32_t *out);

/**
 * Prime factors of `n ≥ 1` with multiplicity, from the series.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum PsStatus ps_big_omega_series(uint64_t n, uint32_t *out);

/**
 * Distinct prime factors by trial division.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum PsStatus ps_omega_oracle(uint64_t n, uint32_t *out);

/**
 * Prime factors with multiplicity by trial division.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum PsStatus ps_big_omega_oracle(uint64_t n, uint32_t *out);

/**
 * Exponent of the prime `p` in `n`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum PsStatus ps_alpha_series(uint64_t p, uint64_t n, uint32_t *out);

/**
 * Factorizes `n`, via the series when `use_series` is true, else by trial division.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum PsStatus ps_factorize(uint64_t n, bool use_series, struct PsFactorization **out);

/**
 * Number of distinct primes; 0 for a NULL handle.
 *
 * # Safety
 * `f` must be NULL or a live handle.
 */
size_t ps_factorization_len(const struct PsFactorization *f);

/**
 * The `index`-th `(prime, exponent)` pair, primes increasing.
 *
 * # Safety
 * `f` must be a live handle; `prime` and `exponent` valid for writes.
 */
enum PsStatus ps_factorization_get(const struct PsFactorization *f,
                                   size_t index,
                                   uint64_t *prime,
                                   uint32_t *exponent);

/**
 * # Safety
 * `f` must be NULL or a handle not yet freed.
 */
void ps_factorization_free(struct PsFactorization *f);

/**
 * All primes `≤ bound` by the sieve of Eratosthenes.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum PsStatus ps_eratosthenes(uint64_t bound, struct PsPrimeList **out);

/**
 * All primes `≤ target` by zero scans of the partial sum, starting from a
 * gap-free seed.
 *
 * # Safety
 * `seed` must point to `seed_len` values; `out` valid for a pointer write.
 */
enum PsStatus ps_sieve_to(uint64_t target,
                          const uint64_t *seed,
                          size_t seed_len,
                          struct PsPrimeList **out);

/**
 * # Safety
 * `list` must be NULL or a live handle.
 */
size_t ps_prime_list_len(const struct PsPrimeList *list);

/**
 * Borrowed pointer to the primes, valid until the list is freed.
 *
 * # Safety
 * `list` must be NULL or a live handle.
 */
const uint64_t *ps_prime_list_data(const struct PsPrimeList *list);

/**
 * # Safety
 * `list` must be NULL or a handle not yet freed.
 */
void ps_prime_list_free(struct PsPrimeList *list);

/**
 * # Safety
 * `out` must be valid for a write.
 */
enum PsStatus ps_zeta_identity_check(double s, uint64_t n_terms, struct PsZetaReport *out);

/**
 * # Safety
 * `primes` must point to `len` values; `out` valid for a pointer write.
 */
enum PsStatus ps_arrangement_new(double d,
                                 const uint64_t *primes,
                                 size_t len,
                                 enum PsPlacement placement,
                                 struct PsArrangement **out);

/**
 * Total number of sources over all sets; 0 for NULL.
 *
 * # Safety
 * `arr` must be NULL or a live handle.
 */
uint64_t ps_arrangement_source_count(const struct PsArrangement *arr);

/**
 * Number of coordinates shared by two or more sets.
 *
 * # Safety
 * `arr` must be a live handle; `out` valid for a write.
 */
enum PsStatus ps_arrangement_overlap_count(const struct PsArrangement *arr, size_t *out);

/**
 * The `index`-th overlap position as the fraction `num/den` of the segment.
 *
 * # Safety
 * `arr` must be a live handle; `num` and `den` valid for writes.
 */
enum PsStatus ps_arrangement_overlap_position(const struct PsArrangement *arr,
                                              size_t index,
                                              uint64_t *num,
                                              uint64_t *den);

/**
 * # Safety
 * `arr` must be a live handle; `out` valid for a write.
 */
enum PsStatus ps_arrangement_coherent(const struct PsArrangement *arr, double x, double *out);

/**
 * # Safety
 * `arr` must be a live handle; `cfg` NULL or live; `out` valid for a write.
 */
enum PsStatus ps_arrangement_incoherent(const struct PsArrangement *arr,
                                        const struct PsConfig *cfg,
                                        double x,
                                        double *out);

/**
 * # Safety
 * `arr` must be NULL or a handle not yet freed.
 */
void ps_arrangement_free(struct PsArrangement *arr);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PRIMESLIT_H */
