/* C interface to the loglim library.
 *
 * Every function returns a loglim_status. On failure the message is
 * available from loglim_last_error() (per thread) until the next call.
 * Strings returned through char** must be released with loglim_string_free.
 * Rationals are passed as text: "a/b", "a" or an exact decimal like "0.75".
 */
#ifndef LOGLIM_H
#define LOGLIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(LOGLIM_BUILDING_LIBRARY)
#define LOGLIM_API __attribute__((visibility("default")))
#else
#define LOGLIM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum loglim_status {
  LOGLIM_OK = 0,
  LOGLIM_ERR_INVALID = 1,
  LOGLIM_ERR_RANGE = 2,
  LOGLIM_ERR_DUPLICATE = 3,
  LOGLIM_ERR_CAP = 4,
  LOGLIM_ERR_NOT_CONVERGED = 5,
  LOGLIM_ERR_PARSE = 6,
  LOGLIM_ERR_IO = 7,
  LOGLIM_ERR_INTERNAL = 8
} loglim_status;

typedef struct loglim_graph loglim_graph;
typedef struct loglim_dist loglim_dist;
typedef struct loglim_group loglim_group;
typedef struct loglim_subgroup loglim_subgroup;

LOGLIM_API const char* loglim_last_error(void);
LOGLIM_API const char* loglim_status_name(loglim_status status);
LOGLIM_API void loglim_string_free(char* s);
LOGLIM_API const char* loglim_version(void);

/* ---- graphs ---------------------------------------------------------------- */

/* edges holds m pairs (u, v) flattened: u0, v0, u1, v1, ... */
LOGLIM_API loglim_status loglim_graph_create(size_t n1, size_t n2, const uint32_t* edges,
                                             size_t m, loglim_graph** out);
/* Builtin name (c4, path2, k2,3, heisenberg:3, pg:2, ...) or JSON file path. */
LOGLIM_API loglim_status loglim_graph_from_spec(const char* spec, loglim_graph** out);
LOGLIM_API loglim_status loglim_graph_from_json(const char* json, loglim_graph** out);
LOGLIM_API loglim_status loglim_graph_to_json(const loglim_graph* g, char** out);
LOGLIM_API void loglim_graph_free(loglim_graph* g);

LOGLIM_API size_t loglim_graph_n1(const loglim_graph* g);
LOGLIM_API size_t loglim_graph_n2(const loglim_graph* g);
LOGLIM_API size_t loglim_graph_edge_count(const loglim_graph* g);
/* Copies up to cap edges as flattened pairs; *count receives |E|. */
LOGLIM_API loglim_status loglim_graph_edges(const loglim_graph* g, uint32_t* buf, size_t cap,
                                            size_t* count);
LOGLIM_API loglim_status loglim_graph_canonical_key(const loglim_graph* g, char** hex);
LOGLIM_API loglim_status loglim_graph_equal(const loglim_graph* a, const loglim_graph* b,
                                            int* equal);

LOGLIM_API loglim_status loglim_graph_blow_up(const loglim_graph* g, size_t m, size_t n,
                                              loglim_graph** out);
LOGLIM_API loglim_status loglim_graph_tensor(const loglim_graph* a, const loglim_graph* b,
                                             loglim_graph** out);
LOGLIM_API loglim_status loglim_graph_disjoint_union(const loglim_graph* a,
                                                     const loglim_graph* b,
                                                     loglim_graph** out);
/* side is 1 or 2. */
LOGLIM_API loglim_status loglim_graph_glue_vertex(const loglim_graph* a, const loglim_graph* b,
                                                  int side, uint32_t va, uint32_t vb,
                                                  loglim_graph** out);
LOGLIM_API loglim_status loglim_graph_glue_edge(const loglim_graph* a, const loglim_graph* b,
                                                size_t ea, size_t eb, loglim_graph** out);
LOGLIM_API loglim_status loglim_graph_is_edge_vertex_transitive(const loglim_graph* g,
                                                               int* result);

/* ---- densities ------------------------------------------------------------- */

/* Decimal string. */
LOGLIM_API loglim_status loglim_hom_count(const loglim_graph* h, const loglim_graph* g,
                                          char** out);
/* "num/den". */
LOGLIM_API loglim_status loglim_t_exact(const loglim_graph* h, const loglim_graph* g,
                                        char** out);
LOGLIM_API loglim_status loglim_t_density(const loglim_graph* h, const loglim_graph* g,
                                          double* out);
LOGLIM_API loglim_status loglim_d_density(const loglim_graph* h, const loglim_graph* g,
                                          double* out);
LOGLIM_API loglim_status loglim_h_density(const loglim_graph* h, const loglim_graph* g,
                                          double* out);
/* {"cap": c, "entries": [{"key", "n1", "n2", "h"}, ...]} */
LOGLIM_API loglim_status loglim_tau_profile_json(const loglim_graph* g, size_t cap,
                                                 char** out);
LOGLIM_API loglim_status loglim_kappa(const loglim_graph* a, const loglim_graph* b,
                                      size_t cap, double* out);

/* ---- distributions --------------------------------------------------------- */

LOGLIM_API loglim_status loglim_dist_create(size_t k1, size_t k2, const double* p,
                                            loglim_dist** out);
/* diag<k>, unif<a>x<b>, point, graph:<graph spec>, or a JSON file path. */
LOGLIM_API loglim_status loglim_dist_from_spec(const char* spec, loglim_dist** out);
LOGLIM_API loglim_status loglim_dist_from_json(const char* json, loglim_dist** out);
LOGLIM_API loglim_status loglim_dist_to_json(const loglim_dist* x, char** out);
LOGLIM_API loglim_status loglim_dist_from_graph(const loglim_graph* g, loglim_dist** out);
LOGLIM_API loglim_status loglim_dist_product(const loglim_dist* x, const loglim_dist* y,
                                             loglim_dist** out);
LOGLIM_API void loglim_dist_free(loglim_dist* x);
/* which: 0 = joint, 1 = X1, 2 = X2. Nats. */
LOGLIM_API loglim_status loglim_dist_entropy(const loglim_dist* x, int which, double* out);
LOGLIM_API loglim_status loglim_dist_mutual_information(const loglim_dist* x, double* out);

/* ---- maximum entropy ------------------------------------------------------- */

typedef struct loglim_maxent_options {
  double tol;
  size_t max_sweeps;
  uint64_t cell_cap; /* 0 = LOGLIM_CAP_CELLS or the built-in default */
} loglim_maxent_options;

typedef struct loglim_maxent_report {
  double m;
  double d_star;
  double t_star;
  double h_star;
  double residual;
  double gibbs_error;
  size_t iterations;
  int converged;
} loglim_maxent_report;

LOGLIM_API void loglim_maxent_options_default(loglim_maxent_options* options);
/* options may be NULL. Returns LOGLIM_ERR_NOT_CONVERGED with the report
 * filled in when the sweep limit is reached first. */
LOGLIM_API loglim_status loglim_maxent(const loglim_graph* h, const loglim_dist* x,
                                       const loglim_maxent_options* options,
                                       loglim_maxent_report* report);
LOGLIM_API loglim_status loglim_sidorenko_entropy_check(const loglim_graph* h,
                                                        const loglim_dist* x, double* lhs,
                                                        double* rhs, int* holds);

/* ---- groups ---------------------------------------------------------------- */

/* cyclic:n, dihedral:n, symmetric:n, alternating:n, q8, heisenberg:p, or a
 * JSON file path. */
LOGLIM_API loglim_status loglim_group_from_spec(const char* spec, loglim_group** out);
LOGLIM_API loglim_status loglim_group_from_json(const char* json, loglim_group** out);
LOGLIM_API loglim_status loglim_group_to_json(const loglim_group* g, char** out);
LOGLIM_API void loglim_group_free(loglim_group* g);
LOGLIM_API size_t loglim_group_order(const loglim_group* g);

LOGLIM_API loglim_status loglim_subgroup_generated(const loglim_group* g,
                                                   const uint32_t* generators, size_t k,
                                                   loglim_subgroup** out);
LOGLIM_API void loglim_subgroup_free(loglim_subgroup* s);
LOGLIM_API size_t loglim_subgroup_order(const loglim_subgroup* s);
LOGLIM_API loglim_status loglim_subgroup_elements(const loglim_subgroup* s, uint32_t* buf,
                                                  size_t cap, size_t* count);
/* Number of subgroups; index them with loglim_group_subgroup_at. */
LOGLIM_API loglim_status loglim_group_subgroup_count(const loglim_group* g, size_t* count);
LOGLIM_API loglim_status loglim_group_subgroup_at(const loglim_group* g, size_t index,
                                                  loglim_subgroup** out);

/* Any of the out pointers may be NULL. */
LOGLIM_API loglim_status loglim_heisenberg(size_t p, loglim_group** group,
                                           loglim_subgroup** t1, loglim_subgroup** t2);
LOGLIM_API loglim_status loglim_projective_plane(size_t p, loglim_graph** out);
LOGLIM_API loglim_status loglim_coset_graph(const loglim_subgroup* t1,
                                            const loglim_subgroup* t2, loglim_graph** out);
/* Decimal string. */
LOGLIM_API loglim_status loglim_w_count(const loglim_graph* h, const loglim_subgroup* t1,
                                        const loglim_subgroup* t2, char** out);
/* "num/den". */
LOGLIM_API loglim_status loglim_t_via_w(const loglim_graph* h, const loglim_subgroup* t1,
                                        const loglim_subgroup* t2, char** out);
/* CSV rows over every catalog triple of groups up to max_order. */
LOGLIM_API loglim_status loglim_sidorenko_sweep_csv(size_t max_order, char** out);

/* ---- quasi-random limit ---------------------------------------------------- */

/* R as "num/den" (exact may be NULL) and as a double (value may be NULL). */
LOGLIM_API loglim_status loglim_quasi_R(const loglim_graph* h, const char* beta,
                                        const char* alpha, char** exact, double* value);
LOGLIM_API loglim_status loglim_quasi_D(const loglim_graph* h, const char* beta,
                                        const char* alpha, char** exact);
LOGLIM_API loglim_status loglim_quasi_M(const loglim_graph* h, const char* beta,
                                        const char* alpha, char** exact);
LOGLIM_API loglim_status loglim_quasi_profile_json(const char* beta, const char* alpha,
                                                   size_t cap, char** out);

LOGLIM_API loglim_status loglim_random_sample(uint64_t n, const char* beta, const char* alpha,
                                              uint64_t seed, uint64_t trial,
                                              loglim_graph** out);
/* CSV: n, median_h, q25, q75, R, median_abs_error, undefined. */
LOGLIM_API loglim_status loglim_convergence_csv(const loglim_graph* h, const char* beta,
                                                const char* alpha, const uint64_t* n_list,
                                                size_t count, size_t trials, uint64_t seed,
                                                char** out);

/* ---- type graphs and sparsity ---------------------------------------------- */

LOGLIM_API loglim_status loglim_type_graph(const loglim_dist* nu, size_t N,
                                           loglim_graph** out);
/* CSV: N, n1, n2, edges, h, h_star, gap. */
LOGLIM_API loglim_status loglim_main_theorem_csv(const loglim_dist* nu, const loglim_graph* h,
                                                 const size_t* Ns, size_t count,
                                                 char** out);
/* {"beta_v", "beta_e", "g_values": {n: g_n}, "t_values": {n: T_n}, "beta_hat"} */
LOGLIM_API loglim_status loglim_sparsity_json(const loglim_graph* g, size_t n_max,
                                              char** out);

#ifdef __cplusplus
}
#endif

#endif
