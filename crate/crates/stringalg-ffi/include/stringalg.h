/* C interface for the stringalg library. */

#pragma once

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code of every fallible call.
typedef enum SaStatus {
  // Success; out-parameters are valid.
  SA_OK = 0,
  // A document or expression failed to parse.
  SA_ERR_SYNTAX = 1,
  // The presentation violates the string-algebra conditions.
  SA_ERR_INVALID_PRESENTATION = 2,
  // A named vertex, arrow, or unknown does not exist.
  SA_ERR_UNKNOWN_NAME = 3,
  // The requested operation is undefined for the given operands.
  SA_ERR_DOMAIN = 4,
  // An argument pointer was NULL or text was not valid UTF-8.
  SA_ERR_ARGUMENT = 5,
  // Internal invariant violation; indicates a bug, not a user error.
  SA_ERR_INTERNAL = 6,
} SaStatus;

// Opaque handle to a validated presentation with fixed sign maps.
typedef struct SaPresentation SaPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Diagnostic for the most recent failure on the calling thread.
//
// The pointer stays valid until the next failing call on the same thread;
// do not free it.
const char *sa_last_error_message(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `text` must be NULL or a pointer previously returned through an
// out-parameter of this library, not yet freed.
void sa_string_free(char *text);

// Parses and validates a presentation document (JSON, UTF-8), inferring
// sign maps unless the document provides them. On `SA_OK`, `*out` owns a
// new handle; release it with [`sa_presentation_free`].
//
// # Safety
// `json` must point to a NUL-terminated buffer and `out` must be a valid
// pointer.
enum SaStatus sa_presentation_parse(const char *json, struct SaPresentation **out);

// Releases a presentation handle. NULL is ignored.
//
// # Safety
// `p` must be NULL or a handle returned by [`sa_presentation_parse`], not
// yet freed.
void sa_presentation_free(struct SaPresentation *p);

// Writes the sign maps of the presentation as a JSON document.
//
// # Safety
// `p` must be a live handle; `out` must be a valid pointer. The result
// must be released with [`sa_string_free`].
enum SaStatus sa_sign_maps_json(const struct SaPresentation *p, char **out);

// Builds the hammock automaton anchored at the trivial string of `vertex`
// with the given sign (+1 or -1) and writes it as a JSON document.
//
// # Safety
// `p` must be a live handle; `vertex` must be NUL-terminated; `out` must
// be valid. The result must be released with [`sa_string_free`].
enum SaStatus sa_hammock_json(const struct SaPresentation *p,
                              const char *vertex,
                              int sign,
                              char **out);

// Solves the hammock word problem at `(vertex, sign)` and writes one
// `name = term` line per unknown, the start component marked `[start]`.
//
// # Safety
// Same contract as [`sa_hammock_json`].
enum SaStatus sa_order_type_text(const struct SaPresentation *p,
                                 const char *vertex,
                                 int sign,
                                 char **out);

// Writes 1 to `*out` when no hammock of the presentation contains a dense
// region, 0 otherwise.
//
// # Safety
// `p` must be a live handle; `out` must be a valid pointer.
enum SaStatus sa_is_domestic(const struct SaPresentation *p, int *out);

// Computes the exceptional-band report and writes it as a JSON document;
// `*out_e` receives the error term `e`. Either out-pointer may be NULL to
// skip that result.
//
// # Safety
// `p` must be a live handle; non-NULL out-pointers must be valid. A
// written string must be released with [`sa_string_free`].
enum SaStatus sa_exceptional_report_json(const struct SaPresentation *p,
                                         size_t *out_e,
                                         char **out_json);

// Parses an order-term expression, normalizes it, and writes the
// normalized rendering (e.g. `"w + sh(w* + w) + w*"`).
//
// # Safety
// `expr` must be NUL-terminated; `out` must be valid. The result must be
// released with [`sa_string_free`].
enum SaStatus sa_term_normalize(const char *expr, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
