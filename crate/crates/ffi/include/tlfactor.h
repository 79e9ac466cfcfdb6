#ifndef TLFACTOR_H
#define TLFACTOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TlfStatus {
  TLF_STATUS_OK = 0,
  TLF_STATUS_NULL_POINTER = 1,
  TLF_STATUS_INVALID_UTF8 = 2,
  TLF_STATUS_PARSE = 3,
  TLF_STATUS_INVALID_DIAGRAM = 4,
  TLF_STATUS_RANK_MISMATCH = 5,
  TLF_STATUS_INDEX_OUT_OF_RANGE = 6,
  TLF_STATUS_BUFFER_TOO_SMALL = 7,
  TLF_STATUS_BUDGET_EXCEEDED = 8,
  TLF_STATUS_INTERNAL = 9,
} TlfStatus;

/**
 * Opaque handle to a diagram.
 */
typedef struct TlfDiagram TlfDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread; empty if none. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *tlf_last_error_message(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void tlf_string_free(char *s);

/**
 * # Safety
 * `d` must be null or a handle from this library that has not been freed.
 */
void tlf_diagram_free(struct TlfDiagram *d);

/**
 * Parses `{"k": K, "chords": [["N",1,"S",2], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum TlfStatus tlf_diagram_from_json(const char *json, struct TlfDiagram **out);

/**
 * Writes a newly allocated JSON string to `out`; free it with [`tlf_string_free`].
 *
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum TlfStatus tlf_diagram_to_json(const struct TlfDiagram *d, char **out);

/**
 * # Safety
 * `out` must be a writable pointer.
 */
enum TlfStatus tlf_diagram_identity(size_t k, struct TlfDiagram **out);

/**
 * The diagram of `s_i` in rank `n` (`n + 1` nodes per face).
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum TlfStatus tlf_diagram_simple(size_t i, size_t n, struct TlfDiagram **out);

/**
 * Product of the simple diagrams of `letters[0..len]`; the removed loops go to
 * `loops`.
 *
 * # Safety
 * `letters` must point to `len` readable values (or be null when `len` is 0);
 * `loops` and `out` must be writable.
 */
enum TlfStatus tlf_diagram_from_word(const size_t *letters,
                                     size_t len,
                                     size_t n,
                                     size_t *loops,
                                     struct TlfDiagram **out);

/**
 * Stacks `top` over `bottom`.
 *
 * # Safety
 * `top` and `bottom` must be live handles; `loops` and `out` must be writable.
 */
enum TlfStatus tlf_diagram_multiply(const struct TlfDiagram *top,
                                    const struct TlfDiagram *bottom,
                                    size_t *loops,
                                    struct TlfDiagram **out);

/**
 * Writes the normal-form word of `d` to `buf`. `len` always receives the word
 * length; if it exceeds `capacity` nothing is written and `BufferTooSmall` is
 * returned.
 *
 * # Safety
 * `d` must be a live handle, `buf` must have room for `capacity` values (or be
 * null when `capacity` is 0) and `len` must be writable.
 */
enum TlfStatus tlf_diagram_factor(const struct TlfDiagram *d,
                                  size_t *buf,
                                  size_t capacity,
                                  size_t *len);

/**
 * Nodes per face.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum TlfStatus tlf_diagram_k(const struct TlfDiagram *d, size_t *out);

/**
 * Rank `n = k - 1`.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum TlfStatus tlf_diagram_rank(const struct TlfDiagram *d, size_t *out);

/**
 * Decimal string of the `m`-th Catalan number; free it with [`tlf_string_free`].
 *
 * # Safety
 * `out` must be writable.
 */
enum TlfStatus tlf_catalan(size_t m, char **out);

/**
 * Whether `letters[0..len]` is a reduced word of a fully commutative element.
 *
 * # Safety
 * `letters` must point to `len` readable values (or be null when `len` is 0) and
 * `out` must be writable.
 */
enum TlfStatus tlf_word_is_fc_reduced(const size_t *letters, size_t len, size_t n, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TLFACTOR_H */
