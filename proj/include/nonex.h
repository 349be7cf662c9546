/* C interface to the non-exchangeability toolkit: exact-rational copula
 * evaluation, validity checks, certified difference search, and the
 * normalized non-exchangeability measure.
 *
 * Conventions:
 *   - Every function that can fail returns a nonex_status and, on failure,
 *     sets *err (when err is non-NULL) to a malloc'd diagnostic; release it
 *     with nonex_string_free. NONEX_OK never sets *err.
 *   - Reports are malloc'd NUL-terminated strings in stable line-oriented
 *     "key = value" form (the surface report is CSV); release with
 *     nonex_string_free.
 *   - Rational inputs are strings: "3/5", "1", or decimals like "0.6"
 *     (converted exactly). Points and deltas are comma-separated rationals.
 *   - Permutations are "id", "reverse", or one-based images like "3,2,4,1".
 *   - Grid steps are "1/m" with m a positive multiple of dim+1.
 *   - threads > 1 only changes wall time, never any report byte.
 */
#ifndef NONEX_H
#define NONEX_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  NONEX_OK = 0,
  NONEX_CHECK_FAILED = 1,   /* a verification ran and found a violation */
  NONEX_PARSE_ERROR = 2,    /* malformed input text or file */
  NONEX_DIM_ERROR = 3,      /* dimension mismatch or out-of-range axis */
  NONEX_STEP_ERROR = 4,     /* grid step not 1/m or m not divisible by d+1 */
  NONEX_UNSUPPORTED_DIM = 5 /* operation undefined for this dimension */
} nonex_status;

typedef struct nonex_copula nonex_copula;
typedef struct nonex_perm nonex_perm;

/* Library version string; static storage, do not free. */
const char* nonex_version(void);

/* Frees a string returned through any char** output. NULL is a no-op. */
void nonex_string_free(char* s);

/* kind: "mdim" (min), "w" (lower bound; not a copula above dim 2),
 * "independence", or "cstar" (the maximally non-exchangeable copula). */
nonex_status nonex_copula_builtin(const char* kind, int dim, nonex_copula** out,
                                  char** err);

/* The attaining family for even dim: delta_csv holds dim/2 sorted rationals
 * in [0, 1/(dim+1)] summing to (dim/2 - 1)/(dim+1); for dim 2 it may be
 * empty or NULL (the constraint forces delta = 0). base is "min",
 * "independence", or NULL for min. */
nonex_status nonex_copula_manifold(int dim, const char* delta_csv,
                                   const char* base, nonex_copula** out,
                                   char** err);

/* Loads and validates a shuffle structure file (see README for the format).
 * Invalid structures fail with NONEX_PARSE_ERROR and a witness message. */
nonex_status nonex_copula_from_file(const char* path, nonex_copula** out,
                                    char** err);

/* View of c with permuted arguments: evaluates c at (u_{pi(1)},...). The new
 * handle shares c's state; both handles are freed independently. */
nonex_status nonex_copula_permuted(const nonex_copula* c, const nonex_perm* pi,
                                   nonex_copula** out, char** err);

int nonex_copula_dim(const nonex_copula* c);

/* Human-readable description of the term (malloc'd). */
nonex_status nonex_copula_describe(const nonex_copula* c, char** out);

void nonex_copula_free(nonex_copula* c);

nonex_status nonex_perm_parse(const char* text, int dim, nonex_perm** out,
                              char** err);
void nonex_perm_free(nonex_perm* p);

/* report: "value = ..." and "decimal = ..." lines. */
nonex_status nonex_eval(const nonex_copula* c, const char* point_csv,
                        char** report, char** err);

/* Evaluates both orientations: point, permuted_point, value,
 * permuted_value, difference. */
nonex_status nonex_diff(const nonex_copula* c, const nonex_perm* pi,
                        const char* point_csv, char** report, char** err);

/* Certified grid maximization of |C(u) - C(u_pi)| with step "1/m". Keys:
 * best_point, best_perm, best_value, certified_upper, gap, evaluations.
 * float_mode nonzero scans in doubles (exploration only; the report then
 * carries "mode = float" and the certificate is heuristic). */
nonex_status nonex_search(const nonex_copula* c, const nonex_perm* pi,
                          const char* step, int threads, int float_mode,
                          char** report, char** err);

/* Normalized non-exchangeability measure: maximizes over permutations too
 * (exhaustive when dim! <= perm_budget, else reversal + perm_budget seeded
 * random permutations, flagged as a lower bound). */
nonex_status nonex_mu(const nonex_copula* c, const char* step,
                      long long perm_budget, unsigned long long seed,
                      int threads, int float_mode, char** report, char** err);

/* Copula axiom checks (grounded, uniform margins, d-increasing, Lipschitz).
 * Returns NONEX_CHECK_FAILED when any check fails; the report is set either
 * way and carries the witnesses. */
nonex_status nonex_verify(const nonex_copula* c, long long samples,
                          long long boxes, unsigned long long seed,
                          char** report, char** err);

/* Points of the attainment set: odd dim lists the single canonical point,
 * even dim lists `count` sampled members with their delta parameters. */
nonex_status nonex_manifold(int dim, int count, unsigned long long seed,
                            char** report, char** err);

/* Pointwise upper bounds on |C(u) - C(u_pi)| valid for every copula C.
 * perm_text may be NULL for the permutation-free combination. */
nonex_status nonex_bound(const char* point_csv, const char* perm_text,
                         char** report, char** err);

/* 2-d difference surface as CSV rows u1,u2,C(u),C(u_pi),diff. */
nonex_status nonex_surface(const nonex_copula* c, const nonex_perm* pi,
                           const char* step, char** report, char** err);

/* Validates a shuffle structure file against the four structure conditions.
 * Returns NONEX_CHECK_FAILED (report set, with witnesses) when invalid. */
nonex_status nonex_validate_file(const char* path, char** report, char** err);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NONEX_H */
