#ifndef SQMIRROR_H
#define SQMIRROR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SqmFlavor {
  SQM_FLAVOR_SQ = 0,
  SQM_FLAVOR_GW = 1,
} SqmFlavor;

// Result codes.
typedef enum SqmStatus {
  SQM_STATUS_OK = 0,
  SQM_STATUS_NULL_POINTER = 1,
  SQM_STATUS_INVALID_ARGUMENT = 2,
  SQM_STATUS_OUT_OF_RANGE = 3,
  SQM_STATUS_DOMAIN = 4,
  SQM_STATUS_FRAME = 5,
  SQM_STATUS_SINGULAR = 6,
  // A verification ran and at least one check failed.
  SQM_STATUS_VERIFICATION_FAILED = 7,
  SQM_STATUS_INTERNAL = 8,
} SqmStatus;

typedef enum SqmSuite {
  SQM_SUITE_RECURSIVITY = 0,
  SQM_SUITE_POLYNOMIALITY = 1,
  SQM_SUITE_MIRROR = 2,
  SQM_SUITE_HURWITZ = 3,
  SQM_SUITE_PSI_INTEGRALS = 4,
  SQM_SUITE_L0 = 5,
} SqmSuite;

// Invariant engine for one `(n, a)` up to a fixed degree.
typedef struct SqmEngine SqmEngine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Create an engine for `(n, a)` valid for degrees `1 … d_max`.
//
// # Safety
// `a` must point to `a_len` readable values (or be null with `a_len == 0`);
// `out` must be a valid pointer.
enum SqmStatus sqm_engine_new(uint32_t n,
                              const int64_t *a,
                              size_t a_len,
                              size_t d_max,
                              struct SqmEngine **out);

// Release an engine. Null is ignored.
//
// # Safety
// `engine` must come from `sqm_engine_new` and not be freed twice.
void sqm_engine_free(struct SqmEngine *engine);

// One invariant as `"p/q"` text in `*out`.
//
// # Safety
// `engine` must be live and `out` valid.
enum SqmStatus sqm_engine_invariant(const struct SqmEngine *engine,
                                    enum SqmFlavor flavor,
                                    size_t d,
                                    size_t p,
                                    char **out);

// The quintic table for `d ≤ d_max` as JSON rows `{"d": …, "cols": […]}`.
//
// # Safety
// `out` must be valid.
enum SqmStatus sqm_table1_json(size_t d_max, char **out);

// Run a verification suite at `frames` random frames drawn from `seed`.
// The verdicts are written to `*out` as JSON whether or not they pass;
// the status is `VerificationFailed` if any check failed. `h_order` of 0
// selects the suite default.
//
// # Safety
// `a` as for `sqm_engine_new`; `out` must be valid.
enum SqmStatus sqm_verify(enum SqmSuite suite,
                          uint32_t n,
                          const int64_t *a,
                          size_t a_len,
                          size_t d_max,
                          size_t h_order,
                          uint64_t seed,
                          size_t frames,
                          char **out);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void sqm_string_free(char *s);

// Message of the last failed call on this thread, or null. Valid until
// the next failing call on the same thread.
const char *sqm_last_error(void);

// Static description of a status code.
const char *sqm_status_str(enum SqmStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SQMIRROR_H */
