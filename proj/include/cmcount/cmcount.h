/* This file is part of cmcount.
 *
 * Licensed under the Apache License, Version 2.0 (see
 * LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
 * This file may not be copied, modified, or distributed
 * except according to those terms.
 */

/* C interface of the cmcount shared library.
 *
 * Integers that may exceed 64 bits (primes, curve coefficients, counts) are
 * passed as decimal strings. Every call that produces data returns a
 * cmc_result, which owns a JSON document and a plain-text rendering.
 * Strings returned by the library stay valid until the owning object is
 * freed or the next call on the same context.
 */

#ifndef CMCOUNT_H
#define CMCOUNT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CMC_API __declspec(dllexport)
#else
#define CMC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cmc_context cmc_context;
typedef struct cmc_result cmc_result;

typedef enum cmc_status {
    CMC_OK = 0,
    CMC_INVALID_ARGUMENT = 1,
    CMC_PRECONDITION = 2,
    CMC_NO_SOLUTION = 3,
    CMC_INCONSISTENT = 4,
    CMC_RESOURCE = 5,
    CMC_DOMAIN = 6,
    CMC_INTERNAL = 7
} cmc_status;

CMC_API const char *cmc_version(void);
CMC_API const char *cmc_status_string(cmc_status status);
/* Process exit code for a status: 0, 2 (precondition, invalid argument,
 * resource, domain), 3 (no solution), 4 (inconsistency), 70 (internal). */
CMC_API int cmc_exit_code(cmc_status status);

CMC_API cmc_status cmc_context_new(cmc_context **out);
CMC_API void cmc_context_free(cmc_context *ctx);
/* Working precision in bits for numeric evaluation; at least 64. Default 256. */
CMC_API cmc_status cmc_context_set_precision(cmc_context *ctx, long bits);
CMC_API long cmc_context_precision(const cmc_context *ctx);
/* Seed for randomized certificates. Default 1. */
CMC_API cmc_status cmc_context_set_seed(cmc_context *ctx, uint64_t seed);
/* Message and reason tag of the last failed call ("" after success). */
CMC_API const char *cmc_context_last_error(const cmc_context *ctx);
CMC_API const char *cmc_context_last_reason(const cmc_context *ctx);

/* Point count of y^2 = x^3 + a x + b over F_p with CM by the order of
 * discriminant D. s selects the image of sqrt(-d) and may be NULL.
 * D = -3 and D = -4 use the special-j formulas. */
CMC_API cmc_status cmc_count(cmc_context *ctx, int64_t D, const char *p, const char *a, const char *b,
                             const char *s, cmc_result **out);
/* Count for p = 1 (mod 4) from the quartic symbol of the discriminant. */
CMC_API cmc_status cmc_count_1mod4(cmc_context *ctx, int64_t D, const char *p, const char *a, const char *b,
                                   cmc_result **out);
/* Count by enumeration, p < 10^7. */
CMC_API cmc_status cmc_oracle(cmc_context *ctx, const char *p, const char *a, const char *b, cmc_result **out);
/* Curve with the requested count (or trace when by_trace is nonzero). */
CMC_API cmc_status cmc_construct(cmc_context *ctx, int64_t D, const char *p, const char *target, int by_trace,
                                 cmc_result **out);
CMC_API cmc_status cmc_epsilon_table(cmc_context *ctx, int64_t D, cmc_result **out);
CMC_API cmc_status cmc_class_poly(cmc_context *ctx, int64_t D, cmc_result **out);
CMC_API cmc_status cmc_gamma3_poly(cmc_context *ctx, int64_t D, cmc_result **out);
/* Eta, gamma2, gamma3 and j at tau = re + i*im (decimal strings). */
CMC_API cmc_status cmc_weber(cmc_context *ctx, const char *re, const char *im, cmc_result **out);
CMC_API cmc_status cmc_qcurve(cmc_context *ctx, int64_t d, cmc_result **out);
CMC_API cmc_status cmc_qcurve_check(cmc_context *ctx, int64_t d, const char *p, cmc_result **out);
/* Built-in consistency suites; quick != 0 skips the prime sweeps.
 * Returns CMC_INCONSISTENT if any suite fails. */
CMC_API cmc_status cmc_selftest(cmc_context *ctx, int quick, cmc_result **out);

CMC_API const char *cmc_result_json(const cmc_result *result);
CMC_API const char *cmc_result_text(const cmc_result *result);
/* Top-level scalar field of the JSON document rendered as text, or NULL. */
CMC_API const char *cmc_result_field(cmc_result *result, const char *key);
CMC_API void cmc_result_free(cmc_result *result);

#ifdef __cplusplus
}
#endif

#endif
