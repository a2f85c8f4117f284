#ifndef LEGENDRE_OVERLAP_H
#define LEGENDRE_OVERLAP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible function.
typedef enum LoStatus {
  LO_STATUS_OK = 0,
  LO_STATUS_NULL_POINTER = 1,
  LO_STATUS_OUT_OF_RANGE = 2,
  LO_STATUS_INVALID_UTF8 = 3,
  LO_STATUS_QUADRATURE = 4,
  LO_STATUS_MALFORMED_INPUT = 5,
  LO_STATUS_PANIC = 6,
} LoStatus;

typedef enum LoVanishingReason {
  LO_VANISHING_REASON_NONE = 0,
  LO_VANISHING_REASON_PARITY = 1,
  LO_VANISHING_REASON_DEGREE_CONSTRAINT = 2,
  LO_VANISHING_REASON_DERIVATIVE_ANNIHILATION = 3,
} LoVanishingReason;

typedef enum LoBoundaryMethod {
  LO_BOUNDARY_METHOD_FACTORIAL = 0,
  LO_BOUNDARY_METHOD_RECURRENCE = 1,
  LO_BOUNDARY_METHOD_GENFUNC = 2,
} LoBoundaryMethod;

typedef enum LoGramMethod {
  LO_GRAM_METHOD_CLOSED_FORM = 0,
  LO_GRAM_METHOD_ORACLE = 1,
} LoGramMethod;

// Opaque Gram matrix handle.
typedef struct LoGram LoGram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code. Never free the result.
const char *lo_status_message(enum LoStatus status);

// Releases a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must be null or a pointer obtained from this library and not yet freed.
void lo_string_free(char *s);

// Closed-form ∫ P_n^(q) P_m^(k) dx over [-1, 1].
//
// `out_reason` may be null.
//
// # Safety
// `out_value` must be a valid pointer; `out_reason` must be null or valid.
enum LoStatus lo_overlap(uint32_t n,
                         uint32_t m,
                         uint32_t q,
                         uint32_t k,
                         char **out_value,
                         enum LoVanishingReason *out_reason);

// Same integral by exact polynomial integration.
//
// # Safety
// `out_value` must be a valid pointer.
enum LoStatus lo_overlap_oracle(uint32_t n, uint32_t m, uint32_t q, uint32_t k, char **out_value);

// Gauss-Legendre estimate of the integral with `nodes` points.
//
// # Safety
// `out` must be a valid pointer.
enum LoStatus lo_overlap_quadrature(uint32_t n,
                                    uint32_t m,
                                    uint32_t q,
                                    uint32_t k,
                                    uint32_t nodes,
                                    double *out);

// P_n^(k)(1).
//
// # Safety
// `out_value` must be a valid pointer.
enum LoStatus lo_boundary(uint32_t n, uint32_t k, enum LoBoundaryMethod method, char **out_value);

// Compares closed form and oracle over 0..=n_max, 0..=q_max, 0..=k_max.
//
// # Safety
// Both out-pointers must be valid.
enum LoStatus lo_verify(uint32_t n_max,
                        uint32_t q_max,
                        uint32_t k_max,
                        uint64_t *out_comparisons,
                        uint64_t *out_mismatches);

// Builds the (n_max+1) x (m_max+1) matrix of ∫ P_n^(q) P_m^(k).
//
// # Safety
// `out` must be a valid pointer.
enum LoStatus lo_gram_new(uint32_t q,
                          uint32_t k,
                          uint32_t n_max,
                          uint32_t m_max,
                          enum LoGramMethod method,
                          struct LoGram **out);

// Parses a Gram matrix from its JSON form.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be a valid pointer.
enum LoStatus lo_gram_from_json(const char *json, struct LoGram **out);

// Releases a handle. Null is a no-op.
//
// # Safety
// `gram` must be null or a handle from this library not yet freed.
void lo_gram_free(struct LoGram *gram);

// Row and column counts.
//
// # Safety
// All pointers must be valid.
enum LoStatus lo_gram_dims(const struct LoGram *gram, uint32_t *rows, uint32_t *cols);

// Entry at row `n`, column `m`.
//
// # Safety
// `gram` and `out_value` must be valid.
enum LoStatus lo_gram_entry(const struct LoGram *gram, uint32_t n, uint32_t m, char **out_value);

// JSON serialization, same format the CLI writes.
//
// # Safety
// `gram` and `out_json` must be valid.
enum LoStatus lo_gram_to_json(const struct LoGram *gram, char **out_json);

// CSV serialization, same format the CLI writes.
//
// # Safety
// `gram` and `out_csv` must be valid.
enum LoStatus lo_gram_to_csv(const struct LoGram *gram, char **out_csv);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEGENDRE_OVERLAP_H */
