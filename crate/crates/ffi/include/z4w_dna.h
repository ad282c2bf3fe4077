#ifndef Z4W_DNA_H
#define Z4W_DNA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Z4wStatus {
  Z4W_STATUS_OK = 0,
  Z4W_STATUS_NULL_POINTER = 1,
  Z4W_STATUS_INVALID_ELEMENT = 2,
  Z4W_STATUS_DIMENSION = 3,
  Z4W_STATUS_CAPACITY = 4,
  Z4W_STATUS_INPUT = 5,
  Z4W_STATUS_PRECONDITION = 6,
  Z4W_STATUS_PARSE = 7,
  Z4W_STATUS_UNDEFINED_DISTANCE = 8,
  Z4W_STATUS_OUT_OF_RANGE = 9,
  Z4W_STATUS_BUFFER_TOO_SMALL = 10,
  Z4W_STATUS_INTERNAL = 11,
} Z4wStatus;

/**
 * A linear code over `R` together with its DNA image.
 */
typedef struct Z4wCode Z4wCode;

typedef struct Z4wClosures {
  bool reverse;
  bool complement;
  bool reverse_complement;
} Z4wClosures;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or an empty string.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *z4w_last_error(void);

/**
 * # Safety
 * `out` must be null or point to writable memory for one `uint8_t`.
 */
enum Z4wStatus z4w_ring_add(uint8_t a, uint8_t b, uint8_t *out);

/**
 * # Safety
 * `out` must be null or point to writable memory for one `uint8_t`.
 */
enum Z4wStatus z4w_ring_mul(uint8_t a, uint8_t b, uint8_t *out);

/**
 * # Safety
 * `out` must be null or point to writable memory for one `uint32_t`.
 */
enum Z4wStatus z4w_gau_dist(uint8_t a, uint8_t b, uint32_t *out);

/**
 * Writes the two-letter image of `a` and a terminating NUL into `out`.
 *
 * # Safety
 * `out` must be null or point to at least three writable bytes.
 */
enum Z4wStatus z4w_phi(uint8_t a, char *out);

/**
 * Octacode-type code from a seed vector such as `"0 2w 2 2+2w"`.
 * `limit` caps the number of enumerated codewords; 0 selects the default.
 *
 * # Safety
 * `first_row` must be a NUL-terminated string; `out` must be writable.
 */
enum Z4wStatus z4w_code_octa(const char *first_row, size_t limit, struct Z4wCode **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum Z4wStatus z4w_code_simplex(uint32_t k, size_t limit, struct Z4wCode **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum Z4wStatus z4w_code_rm1(uint32_t m, uint8_t z, size_t limit, struct Z4wCode **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum Z4wStatus z4w_code_rmr(uint32_t r, uint32_t m, uint8_t z, size_t limit, struct Z4wCode **out);

/**
 * Any family, described as JSON, e.g. `{"family":"rm1","m":2,"z":2}`.
 * Ring elements and matrix rows use integer element codes.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum Z4wStatus z4w_code_from_json(const char *json, size_t limit, struct Z4wCode **out);

/**
 * # Safety
 * `code` must be null or a handle returned by a `z4w_code_*` constructor
 * that has not been freed.
 */
void z4w_code_free(struct Z4wCode *code);

/**
 * Length over `R`; the DNA length is twice this.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum Z4wStatus z4w_code_length(const struct Z4wCode *code, size_t *out);

/**
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum Z4wStatus z4w_code_size(const struct Z4wCode *code, size_t *out);

/**
 * Minimum distance. `pairwise` selects the pairwise scan instead of the
 * default weight-based route; both are exact.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum Z4wStatus z4w_code_min_distance(const struct Z4wCode *code, bool pairwise, uint32_t *out);

/**
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum Z4wStatus z4w_code_closures(const struct Z4wCode *code, struct Z4wClosures *out);

/**
 * DNA word `index` as a NUL-terminated string owned by the handle.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable. The returned
 * pointer is valid until the handle is freed.
 */
enum Z4wStatus z4w_code_dna_word(const struct Z4wCode *code, size_t index, const char **out);

/**
 * Codeword `index` over `R` as element codes. `buf` must hold `len`
 * bytes, at least the code length.
 *
 * # Safety
 * `code` must be a live handle; `buf` must point to `len` writable bytes.
 */
enum Z4wStatus z4w_code_ring_word(const struct Z4wCode *code,
                                  size_t index,
                                  uint8_t *buf,
                                  size_t len);

/**
 * Family label such as `rm1(m=2,z=2)`, owned by the handle.
 *
 * # Safety
 * `code` must be a live handle. The pointer is valid until it is freed.
 */
enum Z4wStatus z4w_code_label(const struct Z4wCode *code, const char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* Z4W_DNA_H */
