#pragma once

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes; the nonzero values match the CLI exit codes.
typedef enum {
  HiggsyStatusOk = 0,
  // Invalid call: null pointer, out-of-range index, unknown enum value.
  HiggsyStatusUsageError = 1,
  // A mathematical precondition was violated.
  HiggsyStatusDomainError = 2,
  // An internal invariant was violated.
  HiggsyStatusInternalError = 3,
} HiggsyStatus;

// Evaluation route for the PGL y-genus.
typedef enum {
  HiggsyMethodClosed = 0,
  HiggsyMethodDirect = 1,
  HiggsyMethodRootSum = 2,
} HiggsyMethod;

// Output format for [`higgsy_poly_render`].
typedef enum {
  HiggsyFormatHuman = 0,
  HiggsyFormatJson = 1,
  HiggsyFormatCsv = 2,
} HiggsyFormat;

// Opaque handle to an integer-coefficient Laurent polynomial in `y`.
typedef struct HiggsyPoly HiggsyPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// A copy of the last error message on this thread; free it with
// `higgsy_string_free`. Empty string when no error has occurred.
char *higgsy_last_error(void);

// Compactly supported y-genus of the semistable PGL_n-Higgs moduli space
// of rank `n`, degree `d`, genus `g`, by the chosen route. The closed
// route requires `gcd(n, d) = 1`.
HiggsyStatus higgsy_pgl_hy(int64_t n, int64_t d, int64_t g, HiggsyMethod method, HiggsyPoly **out);

// `y^g` times the closed-route PGL y-genus: the genus of the
// Picard-quotiented GL-side space. Requires `gcd(n, d) = 1`.
HiggsyStatus higgsy_pm_gl_hy(int64_t n, int64_t d, int64_t g, HiggsyPoly **out);

// `H_y(Sym^k(C x P^{m-1}))` for a genus-`g` curve; zero for
// `k > 2m(g-1)`.
HiggsyStatus higgsy_hy_sym_cxp(int64_t g, uint32_t m, uint32_t k, HiggsyPoly **out);

// Convert a compactly supported y-genus of a `2N`-dimensional space
// (`N = half_dim`) into the y-genus without supports.
HiggsyStatus higgsy_noncompact_ygenus(const HiggsyPoly *p, int64_t half_dim, HiggsyPoly **out);

// Euler characteristic of the PGL_n-Higgs moduli space as a decimal
// string (`mu(n) * n^{2g-3}`).
HiggsyStatus higgsy_euler(int64_t n, int64_t g, char **out);

// Number of nonzero terms.
size_t higgsy_poly_term_count(const HiggsyPoly *p);

// Exponent of the `index`-th term (ascending order).
HiggsyStatus higgsy_poly_term_exp(const HiggsyPoly *p, size_t index, int64_t *out);

// Coefficient of the `index`-th term (ascending order) as a decimal
// string.
HiggsyStatus higgsy_poly_term_coeff(const HiggsyPoly *p, size_t index, char **out);

// Serialize a polynomial in the chosen format (same formats as the CLI).
HiggsyStatus higgsy_poly_render(const HiggsyPoly *p, HiggsyFormat format, char **out);

// The value at `y = 1` (sum of coefficients) as a decimal string.
HiggsyStatus higgsy_poly_eval_one(const HiggsyPoly *p, char **out);

// Free a polynomial handle. Null is a no-op.
void higgsy_poly_free(HiggsyPoly *p);

// Free a string returned by this library. Null is a no-op.
void higgsy_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
