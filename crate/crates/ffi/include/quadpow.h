#ifndef QUADPOW_H
#define QUADPOW_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define QP_ENGINE_ITERATIVE 0

#define QP_ENGINE_BINOMIAL 1

#define QP_ENGINE_DOUBLING 2

typedef enum QpStatus {
  QP_STATUS_OK = 0,
  QP_STATUS_NULL_POINTER = 1,
  QP_STATUS_INVALID_UTF8 = 2,
  QP_STATUS_PARSE = 3,
  // An argument outside an operation's domain, e.g. modulus 1 or `m = 0`
  // for the binomial engine.
  QP_STATUS_DOMAIN = 4,
  QP_STATUS_INVALID_ENGINE = 5,
  QP_STATUS_WRONG_KIND = 6,
  QP_STATUS_INDEX_OUT_OF_RANGE = 7,
  QP_STATUS_OVERFLOW = 8,
  QP_STATUS_PANIC = 9,
} QpStatus;

typedef enum QpKind {
  QP_KIND_SCALAR = 0,
  // `(a, b)` with `x^m = a*x + b`.
  QP_KIND_LINEAR_FORM = 1,
  // Row-major 2x2 matrix.
  QP_KIND_MATRIX = 2,
  QP_KIND_POLYNOMIAL = 3,
} QpKind;

// Opaque result handle.
typedef struct QpValue QpValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// `P_m(t, d)` where `t` and `d` are decimal strings (or `r mod n` when a
// modulus is given).
//
// # Safety
// `t` and `d` must be NUL-terminated strings; `out` must be writable.
enum QpStatus qp_pm(const char *t,
                    const char *d,
                    uint64_t m,
                    uint32_t engine_code,
                    uint64_t modulus,
                    struct QpValue **out);

// The reduced form `x^m = a*x + b` modulo `x^2 - t*x + d`, as a
// [`QpKind::LinearForm`] value.
//
// # Safety
// As for [`qp_pm`].
enum QpStatus qp_xpow(const char *t,
                      const char *d,
                      uint64_t m,
                      uint32_t engine_code,
                      uint64_t modulus,
                      struct QpValue **out);

// `M^m` for a matrix written `a,b;c,d`.
//
// # Safety
// `matrix` must be a NUL-terminated string; `out` must be writable.
enum QpStatus qp_matpow(const char *matrix,
                        uint64_t m,
                        uint32_t engine_code,
                        uint64_t modulus,
                        struct QpValue **out);

// The Fibonacci number `F_n`.
//
// # Safety
// `out` must be writable.
enum QpStatus qp_fib(uint64_t n, uint32_t engine_code, uint64_t modulus, struct QpValue **out);

// The Lucas number `L_n`.
//
// # Safety
// `out` must be writable.
enum QpStatus qp_lucas(uint64_t n, uint64_t modulus, struct QpValue **out);

// `F_(nm)` evaluated through its expansion in `F_n` and `L_n`. Needs `n, m >= 1`.
//
// # Safety
// `out` must be writable.
enum QpStatus qp_fib_nm(uint64_t n, uint64_t m, struct QpValue **out);

// The polynomial `P_m(T, D)` with integer coefficients.
//
// # Safety
// `out` must be writable.
enum QpStatus qp_symbolic(uint64_t m, struct QpValue **out);

// # Safety
// `value` must be null or a live handle from this library.
enum QpStatus qp_value_kind(const struct QpValue *value, enum QpKind *out);

// Number of scalar entries: 1 for a scalar, 2 for a linear form, 4 for a
// matrix, 0 for a polynomial.
//
// # Safety
// `value` must be null or a live handle from this library.
enum QpStatus qp_value_len(const struct QpValue *value, size_t *out);

// A new scalar handle holding entry `index` (row-major for matrices).
//
// # Safety
// `value` must be null or a live handle from this library; `out` must be writable.
enum QpStatus qp_value_entry(const struct QpValue *value, size_t index, struct QpValue **out);

// Text form of a value: integers in decimal, residues as `r mod n`, linear
// forms as `a,b`, matrices as `a,b;c,d`, polynomials as e.g. `T^2 - D`.
// Release the string with [`qp_string_free`].
//
// # Safety
// `value` must be null or a live handle from this library; `out` must be writable.
enum QpStatus qp_value_to_string(const struct QpValue *value, char **out);

// A scalar as `int64_t`. Residues give their representative in `[0, n)`.
//
// # Safety
// `value` must be null or a live handle from this library; `out` must be writable.
enum QpStatus qp_value_to_i64(const struct QpValue *value, int64_t *out);

// # Safety
// `value` must be null or a handle from this library not yet freed.
void qp_value_free(struct QpValue *value);

// # Safety
// `s` must be null or a string from [`qp_value_to_string`] not yet freed.
void qp_string_free(char *s);

// Message for the last failed call on this thread, or null if the most
// recent status-returning call succeeded. Valid until the next library call
// on the same thread.
const char *qp_last_error_message(void);

// Library version, e.g. `0.1.0`. Static storage; do not free.
const char *qp_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUADPOW_H */
