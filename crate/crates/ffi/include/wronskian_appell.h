/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef WRONSKIAN_APPELL_H
#define WRONSKIAN_APPELL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define WAP_ROUTE_DIRECT 0

#define WAP_ROUTE_PHI 1

#define WAP_ROUTE_RECURRENCE 2

#define WAP_ROUTE_CROSS_CHECKED 3

#define WAP_FORMAT_PLAIN 0

#define WAP_FORMAT_JSON 1

#define WAP_FORMAT_LATEX 2

// Result code of every fallible call.
typedef enum WapStatus {
  WAP_STATUS_OK = 0,
  WAP_STATUS_NULL_POINTER = 1,
  WAP_STATUS_INVALID_UTF8 = 2,
  WAP_STATUS_PARSE_ERROR = 3,
  WAP_STATUS_INVALID_ARGUMENT = 4,
  WAP_STATUS_CHECK_FAILED = 5,
  WAP_STATUS_PANIC = 6,
} WapStatus;

// A polynomial with rational coefficients.
typedef struct WapPoly WapPoly;

// An Appell sequence together with its memo tables.
typedef struct WapSpec WapSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a sequence description such as `"hermite"` or `"laguerre:1/2"`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a writable pointer.
enum WapStatus wap_spec_parse(const char *text, struct WapSpec **out);

// # Safety
// `spec` must come from [`wap_spec_parse`] and not be used afterwards. Null is ignored.
void wap_spec_free(struct WapSpec *spec);

// Writes the cumulant `c_k` (`k ≥ 1`) as a `p/q` string.
//
// # Safety
// `spec` must be a live handle and `out` a writable pointer.
enum WapStatus wap_spec_cumulant(const struct WapSpec *spec, size_t k, char **out);

// Computes `A_λ` for a partition written as `"3,2,1"`.
//
// # Safety
// `spec` must be a live handle, `partition` a NUL-terminated string and `out`
// a writable pointer.
enum WapStatus wap_compute(const struct WapSpec *spec,
                           const char *partition,
                           int32_t route,
                           struct WapPoly **out);

// Degree of the polynomial, or -1 for the zero polynomial or a null handle.
//
// # Safety
// `poly` must be null or a live handle.
int64_t wap_poly_degree(const struct WapPoly *poly);

// Writes the coefficient of `x^i` as a `p/q` string; zero beyond the degree.
//
// # Safety
// `poly` must be a live handle and `out` a writable pointer.
enum WapStatus wap_poly_coeff(const struct WapPoly *poly, size_t i, char **out);

// Renders the polynomial in one of the `WAP_FORMAT_*` formats. The JSON form
// is the array of coefficient strings, lowest degree first.
//
// # Safety
// `poly` must be a live handle and `out` a writable pointer.
enum WapStatus wap_poly_render(const struct WapPoly *poly, int32_t format, char **out);

// # Safety
// `poly` must come from [`wap_compute`] and not be used afterwards. Null is ignored.
void wap_poly_free(struct WapPoly *poly);

// Runs a verification suite (or `"all"`) up to `max_size` and writes a JSON
// array of suite reports. Returns `WAP_STATUS_CHECK_FAILED` when any suite
// fails; the report is written in that case too.
//
// # Safety
// `spec` must be a live handle, `identity` a NUL-terminated string and
// `out_json` a writable pointer.
enum WapStatus wap_verify(const struct WapSpec *spec,
                          const char *identity,
                          size_t max_size,
                          char **out_json);

// Writes the Plancherel report (mean, second moment, variance) for size `n`
// as a JSON object.
//
// # Safety
// `spec` must be a live handle and `out_json` a writable pointer.
enum WapStatus wap_stats_json(const struct WapSpec *spec, size_t n, char **out_json);

// # Safety
// `s` must come from this library and not be used afterwards. Null is ignored.
void wap_string_free(char *s);

// Message for the most recent failure on this thread, or null. The pointer
// stays valid until the next library call on the same thread.
const char *wap_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *wap_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WRONSKIAN_APPELL_H */
