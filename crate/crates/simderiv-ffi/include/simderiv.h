#ifndef SIMDERIV_H
#define SIMDERIV_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by fallible entry points.
 */
typedef enum SdStatus {
  SdOk = 0,
  /**
   * A required pointer argument was null.
   */
  SdNullPointer = 1,
  /**
   * An input string was not valid UTF-8 or failed to parse.
   */
  SdParseError = 2,
  /**
   * Arguments were structurally valid but violated a precondition.
   */
  SdInvalidArgument = 3,
} SdStatus;

/**
 * Opaque polynomial in Q[x, y].
 */
typedef struct SdPoly SdPoly;

/**
 * Opaque classification result: verdict plus the derivation it concerns.
 */
typedef struct SdVerdict SdVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a polynomial over x, y with rational coefficients.
 * On success stores a new handle in `out`.
 */
enum SdStatus sd_poly_parse(const char *src, struct SdPoly **out);

/**
 * Canonical text form of a polynomial. Free with `sd_string_free`.
 * Returns null when `p` is null.
 */
char *sd_poly_format(const struct SdPoly *p);

/**
 * Releases a polynomial handle. Null is a no-op.
 */
void sd_poly_free(struct SdPoly *p);

/**
 * Classifies y^r dx + (c1 x^t1 y^s1 + c2 x^t2 y^s2) dy. The coefficients
 * are rational literals such as "1", "-2", "1/2". On success stores a new
 * verdict handle in `out`.
 */
enum SdStatus sd_classify(unsigned int r,
                          unsigned int t1,
                          unsigned int s1,
                          unsigned int t2,
                          unsigned int s2,
                          const char *c1,
                          const char *c2,
                          struct SdVerdict **out);

/**
 * 1 when the verdict is Simple, 0 when NotSimple, -1 when `v` is null.
 */
int sd_verdict_is_simple(const struct SdVerdict *v);

/**
 * The decisive rule name. Free with `sd_string_free`.
 */
char *sd_verdict_rule(const struct SdVerdict *v);

/**
 * The full verdict as a JSON document. Free with `sd_string_free`.
 */
char *sd_verdict_json(const struct SdVerdict *v);

/**
 * Re-checks the verdict's witness against its derivation.
 * 1 = verified (or Simple, nothing to check), 0 = failed, -1 = null input.
 */
int sd_verdict_verify(const struct SdVerdict *v);

/**
 * Releases a verdict handle. Null is a no-op.
 */
void sd_verdict_free(struct SdVerdict *v);

/**
 * Computes the iterated-division polynomial for univariate a, b (text in x
 * only). On success stores its canonical text form in `out`.
 * Fails with `SD_INVALID_ARGUMENT` when a is zero or either input mentions y.
 */
enum SdStatus sd_pfrak(const char *a, const char *b, char **out);

/**
 * Bounded-degree Darboux element search for the derivation (dx, dy), both
 * modes. On success stores one "f = ...; lambda = ..." line per certificate
 * (empty string when none exist) in `out`.
 */
enum SdStatus sd_darboux_search(const struct SdPoly *dx,
                                const struct SdPoly *dy,
                                unsigned int max_deg_x,
                                unsigned int max_deg_y,
                                char **out);

/**
 * Releases a string returned by this library. Null is a no-op.
 */
void sd_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIMDERIV_H */
