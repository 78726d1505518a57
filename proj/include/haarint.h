#ifndef HAARINT_H
#define HAARINT_H

/* C interface for exact moment computation over the unitary group.
 *
 * Every computation takes an opaque context carrying the configured size
 * caps and the last error message, and writes its result as a heap
 * allocated JSON string to *out_json.  Rationals appear in JSON as "p/q"
 * strings, never as floats.  Release result strings with
 * haarint_string_free.  Index tuples are 1-based arrays of length d.
 *
 * A context is not meant to be shared between threads without external
 * locking; distinct contexts are safe to use concurrently.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct haarint_context haarint_context;

typedef enum haarint_status {
  HAARINT_OK = 0,
  HAARINT_ERR_INVALID_ARGUMENT = 1,
  HAARINT_ERR_CAPACITY = 2,
  HAARINT_ERR_DOMAIN = 3,
  HAARINT_ERR_INTERNAL = 4
} haarint_status;

haarint_context* haarint_context_new(void);
void haarint_context_free(haarint_context* ctx);

/* Caps must be at least 1.  degree_cap bounds the monomial degree of all
 * computations (default 6); oracle_cap bounds the degree of the Gram
 * inverse oracle, which scales factorially (default 5). */
haarint_status haarint_set_degree_cap(haarint_context* ctx, int cap);
haarint_status haarint_set_oracle_cap(haarint_context* ctx, int cap);

/* Message for the most recent failing call on this context; empty string
 * when no call has failed.  Owned by the context. */
const char* haarint_last_error(const haarint_context* ctx);

/* Static name for a status code, e.g. "HAARINT_OK". */
const char* haarint_status_name(haarint_status status);

void haarint_string_free(char* s);

/* E[u_{i1 j1}...u_{id jd} conj(u_{k1 l1})...conj(u_{kd ld})] over U_n.
 * Result: {"moment":"p/q"}. */
haarint_status haarint_moment(haarint_context* ctx, const int* i, const int* j,
                              const int* k, const int* l, int d, long n,
                              char** out_json);

/* The same moment as a function of n, one branch per value of min(n, d).
 * Result: {"branches":[{"min_n":p,"num":[...],"den":[...]}]} with
 * ascending coefficient arrays. */
haarint_status haarint_moment_symbolic(haarint_context* ctx, const int* i,
                                       const int* j, const int* k, const int* l,
                                       int d, char** out_json);

/* Independent evaluation through the inverse Gram matrix; requires n >= d
 * and d within the oracle cap.  Result: {"moment":"p/q"}. */
haarint_status haarint_weingarten_moment(haarint_context* ctx, const int* i,
                                         const int* j, const int* k, const int* l,
                                         int d, long n, char** out_json);

/* Sample mean of the monomial over Haar samples; deterministic for a fixed
 * seed.  Result: {"mean_re":x,"mean_im":y,"stderr":s}. */
haarint_status haarint_mc_moment(haarint_context* ctx, const int* i, const int* j,
                                 const int* k, const int* l, int d, long n,
                                 uint64_t samples, uint64_t seed, char** out_json);

/* Closed form for single-row moments E[prod u_{1 j_a} prod conj(u_{1 l_a})].
 * Result: {"moment":"p/q"}. */
haarint_status haarint_one_row_moment(haarint_context* ctx, const int* j,
                                      const int* l, int d, long n, char** out_json);

/* Partitions of d in decreasing lexicographic order with dimensions.
 * Result: {"partitions":[{"shape":[...],"dimension":"f"}]}. */
haarint_status haarint_partitions(haarint_context* ctx, int d, char** out_json);

/* Standard tableaux of a shape in the library's fixed enumeration order.
 * Result: {"shape":[...],"dimension":"f","tableaux":[{"shape":...,"rows":...}],
 *          "contents":[[...]]}. */
haarint_status haarint_tableaux(haarint_context* ctx, const int* shape_rows,
                                int shape_len, char** out_json);

/* Matrix unit for the (row, col) pair of tableau indices into the fixed
 * enumeration.  Result: {"row":{...},"col":{...},"element":{...},
 * "c_squared":"p/q","norm":{"coeffs":[...]}}. */
haarint_status haarint_matrix_unit(haarint_context* ctx, const int* shape_rows,
                                   int shape_len, int row, int col,
                                   char** out_json);

/* Invariant suite at degree d; full != 0 adds the expensive checks.
 * Result: {"checks":[{"name":"...","passed":true,"detail":"..."}]}. */
haarint_status haarint_verify(haarint_context* ctx, int d, int full,
                              char** out_json);

/* Gram matrix and its exact inverse at (d, n) for external auditing.
 * Result: {"gram":[["..."]],"weingarten":[["p/q"]]}. */
haarint_status haarint_gram_dump(haarint_context* ctx, int d, long n,
                                 char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* HAARINT_H */
