/* C interface to the zonotope fitting library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Functions returning char* hand over ownership; release it with
 * zf_string_free. Every call reports a zf_status; on failure
 * zf_last_error() describes the problem for the calling thread. */
#ifndef ZONOFIT_ZONOFIT_H_
#define ZONOFIT_ZONOFIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ZONOFIT_BUILDING_LIBRARY)
#define ZF_API __attribute__((visibility("default")))
#else
#define ZF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct zf_polytope zf_polytope;
typedef struct zf_zonotope zf_zonotope;
typedef struct zf_run zf_run;

typedef enum zf_status {
  ZF_OK = 0,
  ZF_ERR_INVALID_ARGUMENT = 1, /* bad option or null pointer */
  ZF_ERR_PARSE = 2,            /* malformed JSON */
  ZF_ERR_INVALID_INPUT = 3,    /* well-formed but unusable geometry */
  ZF_ERR_SOLVER = 4,           /* numerical or solver failure */
  ZF_ERR_PERTURBATION_BUDGET = 5,
  ZF_ERR_LOCALITY = 6, /* locality conditions fail */
  ZF_ERR_INTERNAL = 7
} zf_status;

typedef enum zf_step_rule {
  ZF_RULE_CONSERVATIVE = 0,
  ZF_RULE_RANDOM = 1,
  ZF_RULE_AGGRESSIVE = 2,
  ZF_RULE_HYBRID = 3
} zf_step_rule;

typedef enum zf_objective { ZF_OBJECTIVE_EXACT = 0, ZF_OBJECTIVE_COARSE = 1 } zf_objective;

typedef enum zf_start { ZF_START_AUTO = 0, ZF_START_RANDOM = 1 } zf_start;

typedef struct zf_options {
  int rank;               /* 0 takes the rank of the initial zonotope */
  int max_steps;          /* iteration cap N */
  double threshold;       /* stop once the objective is at most this */
  zf_step_rule rule;
  int switch_at;          /* hybrid switch iteration, negative for N / 3 */
  uint64_t seed;
  double perturb_scale;   /* jitter half-width relative to the longest generator */
  int max_perturb_tries;
  zf_objective objective;
  double tol_active;      /* relative band for achieving pairs */
  int cone_fallback;      /* nonzero: follow the cone when the feasible set is empty */
  int backtrack;          /* nonzero: halve conservative steps until the objective drops */
  int max_backtracks;
  int record_timing;      /* zero leaves the ms column at 0 for bitwise comparison */
} zf_options;

ZF_API const char* zf_version(void);
ZF_API const char* zf_status_string(zf_status status);
/* Message of the last failure on this thread, empty after a success. */
ZF_API const char* zf_last_error(void);
ZF_API void zf_string_free(char* s);

ZF_API zf_status zf_polytope_from_json(const char* json, zf_polytope** out);
ZF_API zf_status zf_polytope_to_json(const zf_polytope* p, char** out);
ZF_API int zf_polytope_dim(const zf_polytope* p);
ZF_API int zf_polytope_vertex_count(const zf_polytope* p);
ZF_API void zf_polytope_free(zf_polytope* p);

ZF_API zf_status zf_zonotope_from_json(const char* json, zf_zonotope** out);
/* Canonical (lexicographically sorted) generators. */
ZF_API zf_status zf_zonotope_to_json(const zf_zonotope* z, char** out);
ZF_API int zf_zonotope_rank(const zf_zonotope* z);
ZF_API int zf_zonotope_dim(const zf_zonotope* z);
ZF_API zf_status zf_zonotope_as_polytope(const zf_zonotope* z, zf_polytope** out);
ZF_API void zf_zonotope_free(zf_zonotope* z);

/* Hausdorff distance (exact, or between vertex sets when coarse is
 * nonzero). report, when not null, receives the achieving pairs as JSON. */
ZF_API zf_status zf_distance(const zf_polytope* p, const zf_zonotope* z, int coarse, double* value, char** report);

/* Locality conditions as JSON; ok receives 1 when they all hold. */
ZF_API zf_status zf_locality_report(const zf_polytope* p, const zf_zonotope* z, int* ok, char** report);

/* Feasibility cone, interior margin, direction status and certificate as
 * JSON. On ZF_ERR_LOCALITY the report holds the violations instead. */
ZF_API zf_status zf_cone_report(const zf_polytope* p, const zf_zonotope* z, zf_objective objective, char** report);

ZF_API zf_status zf_warmstart(const zf_polytope* p, int rank, zf_start start, uint64_t seed, zf_zonotope** out);

ZF_API void zf_options_default(zf_options* options);
ZF_API zf_status zf_optimize(const zf_polytope* p, const zf_zonotope* start, const zf_options* options,
                             zf_run** out);
ZF_API zf_status zf_run_zonotope(const zf_run* run, zf_zonotope** out);
/* Columns iter,d_exact,d_coarse,step,rule,active_pairs,cone_status,ms. */
ZF_API zf_status zf_run_trace_csv(const zf_run* run, char** out);
/* Termination, certificate, message, final distances and iteration count. */
ZF_API zf_status zf_run_summary_json(const zf_run* run, char** out);
ZF_API size_t zf_run_iterations(const zf_run* run);
/* Objective before every iteration followed by the final value; count
 * receives iterations + 1 and at most capacity values are written. */
ZF_API zf_status zf_run_objective_curve(const zf_run* run, double* values, size_t capacity, size_t* count);
ZF_API void zf_run_free(zf_run* run);

/* Planar plot of P, Z and the achieving pairs. */
ZF_API zf_status zf_render_svg(const zf_polytope* p, const zf_zonotope* z, char** out);

ZF_API zf_status zf_random_polytope(int dim, int count, uint64_t seed, zf_polytope** out);
ZF_API zf_status zf_random_zonotope(int rank, int dim, uint64_t seed, zf_zonotope** out);

#ifdef __cplusplus
}
#endif

#endif /* ZONOFIT_ZONOFIT_H_ */
