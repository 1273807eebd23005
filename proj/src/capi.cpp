#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "loglim.h"
#include "loglim/error.hpp"
#include "loglim/io.hpp"

struct loglim_graph {
  loglim::BipartiteGraph g;
};

struct loglim_dist {
  loglim::JointDistribution x;
};

struct loglim_group {
  loglim::GroupPtr g;
  // Filled on first use of the subgroup enumeration.
  std::optional<std::vector<loglim::Subgroup>> subgroups;
};

struct loglim_subgroup {
  loglim::Subgroup s;
};

namespace {

thread_local std::string last_error;

loglim_status map_code(loglim::ErrorCode code) {
  using loglim::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return LOGLIM_ERR_INVALID;
    case ErrorCode::IndexOutOfRange: return LOGLIM_ERR_RANGE;
    case ErrorCode::DuplicateEdge: return LOGLIM_ERR_DUPLICATE;
    case ErrorCode::CapExceeded: return LOGLIM_ERR_CAP;
    case ErrorCode::NotConverged: return LOGLIM_ERR_NOT_CONVERGED;
    case ErrorCode::Parse: return LOGLIM_ERR_PARSE;
    case ErrorCode::Io: return LOGLIM_ERR_IO;
  }
  return LOGLIM_ERR_INTERNAL;
}

template <class F>
loglim_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return LOGLIM_OK;
  } catch (const loglim::Error& e) {
    last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LOGLIM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LOGLIM_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return LOGLIM_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) loglim::fail(loglim::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void put_string(char** out, const std::string& s) {
  need(out, "output");
  *out = dup_string(s);
}

template <class F>
loglim_status make_graph(loglim_graph** out, F&& f) {
  return guarded([&] {
    need(out, "output");
    *out = new loglim_graph{f()};
  });
}

template <class F>
loglim_status make_dist(loglim_dist** out, F&& f) {
  return guarded([&] {
    need(out, "output");
    *out = new loglim_dist{f()};
  });
}

loglim::QuasiParams quasi(const char* beta, const char* alpha) {
  need(beta, "beta");
  need(alpha, "alpha");
  return loglim::QuasiParams(loglim::parse_rational(beta), loglim::parse_rational(alpha));
}

}  // namespace

extern "C" {

const char* loglim_last_error(void) { return last_error.c_str(); }

const char* loglim_status_name(loglim_status status) {
  switch (status) {
    case LOGLIM_OK: return "ok";
    case LOGLIM_ERR_INVALID: return "invalid-argument";
    case LOGLIM_ERR_RANGE: return "index-out-of-range";
    case LOGLIM_ERR_DUPLICATE: return "duplicate-edge";
    case LOGLIM_ERR_CAP: return "cap-exceeded";
    case LOGLIM_ERR_NOT_CONVERGED: return "not-converged";
    case LOGLIM_ERR_PARSE: return "parse-error";
    case LOGLIM_ERR_IO: return "io-error";
    case LOGLIM_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

void loglim_string_free(char* s) { std::free(s); }

const char* loglim_version(void) { return "0.1.0"; }

// ---- graphs ------------------------------------------------------------------

loglim_status loglim_graph_create(size_t n1, size_t n2, const uint32_t* edges, size_t m,
                                  loglim_graph** out) {
  return make_graph(out, [&] {
    if (m > 0) need(edges, "edges");
    std::vector<loglim::Edge> e(m);
    for (size_t i = 0; i < m; ++i) e[i] = {edges[2 * i], edges[2 * i + 1]};
    return loglim::BipartiteGraph(n1, n2, std::move(e));
  });
}

loglim_status loglim_graph_from_spec(const char* spec, loglim_graph** out) {
  return make_graph(out, [&] {
    need(spec, "spec");
    return loglim::resolve_graph(spec);
  });
}

loglim_status loglim_graph_from_json(const char* json, loglim_graph** out) {
  return make_graph(out, [&] {
    need(json, "json");
    return loglim::graph_from_json(json);
  });
}

loglim_status loglim_graph_to_json(const loglim_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    put_string(out, loglim::graph_to_json(g->g));
  });
}

void loglim_graph_free(loglim_graph* g) { delete g; }

size_t loglim_graph_n1(const loglim_graph* g) { return g ? g->g.n1() : 0; }
size_t loglim_graph_n2(const loglim_graph* g) { return g ? g->g.n2() : 0; }
size_t loglim_graph_edge_count(const loglim_graph* g) { return g ? g->g.edge_count() : 0; }

loglim_status loglim_graph_edges(const loglim_graph* g, uint32_t* buf, size_t cap,
                                 size_t* count) {
  return guarded([&] {
    need(g, "graph");
    need(count, "count");
    const auto edges = g->g.edges();
    *count = edges.size();
    if (cap > 0) need(buf, "buffer");
    for (size_t i = 0; i < edges.size() && i < cap; ++i) {
      buf[2 * i] = edges[i].u;
      buf[2 * i + 1] = edges[i].v;
    }
  });
}

loglim_status loglim_graph_canonical_key(const loglim_graph* g, char** hex) {
  return guarded([&] {
    need(g, "graph");
    put_string(hex, loglim::canonical_key(g->g).hex());
  });
}

loglim_status loglim_graph_equal(const loglim_graph* a, const loglim_graph* b, int* equal) {
  return guarded([&] {
    need(a, "graph");
    need(b, "graph");
    need(equal, "output");
    *equal = a->g == b->g;
  });
}

loglim_status loglim_graph_blow_up(const loglim_graph* g, size_t m, size_t n,
                                   loglim_graph** out) {
  return make_graph(out, [&] {
    need(g, "graph");
    return loglim::blow_up(g->g, m, n);
  });
}

loglim_status loglim_graph_tensor(const loglim_graph* a, const loglim_graph* b,
                                  loglim_graph** out) {
  return make_graph(out, [&] {
    need(a, "graph");
    need(b, "graph");
    return loglim::tensor_product(a->g, b->g);
  });
}

loglim_status loglim_graph_disjoint_union(const loglim_graph* a, const loglim_graph* b,
                                          loglim_graph** out) {
  return make_graph(out, [&] {
    need(a, "graph");
    need(b, "graph");
    return loglim::disjoint_union(a->g, b->g);
  });
}

loglim_status loglim_graph_glue_vertex(const loglim_graph* a, const loglim_graph* b, int side,
                                       uint32_t va, uint32_t vb, loglim_graph** out) {
  return make_graph(out, [&] {
    need(a, "graph");
    need(b, "graph");
    if (side != 1 && side != 2)
      loglim::fail(loglim::ErrorCode::InvalidArgument, "side must be 1 or 2");
    return loglim::glue_vertex(a->g, b->g, side == 1 ? loglim::Side::One : loglim::Side::Two,
                               va, vb);
  });
}

loglim_status loglim_graph_glue_edge(const loglim_graph* a, const loglim_graph* b, size_t ea,
                                     size_t eb, loglim_graph** out) {
  return make_graph(out, [&] {
    need(a, "graph");
    need(b, "graph");
    return loglim::glue_edge(a->g, b->g, ea, eb);
  });
}

loglim_status loglim_graph_is_edge_vertex_transitive(const loglim_graph* g, int* result) {
  return guarded([&] {
    need(g, "graph");
    need(result, "output");
    *result = loglim::is_edge_vertex_transitive(g->g);
  });
}

// ---- densities -----------------------------------------------------------------

loglim_status loglim_hom_count(const loglim_graph* h, const loglim_graph* g, char** out) {
  return guarded([&] {
    need(h, "H");
    need(g, "G");
    put_string(out, loglim::to_string(loglim::hom_count_auto(h->g, g->g)));
  });
}

loglim_status loglim_t_exact(const loglim_graph* h, const loglim_graph* g, char** out) {
  return guarded([&] {
    need(h, "H");
    need(g, "G");
    put_string(out, loglim::to_string(loglim::t_exact(h->g, g->g)));
  });
}

#define LOGLIM_DENSITY(name, fn)                                                  \
  loglim_status name(const loglim_graph* h, const loglim_graph* g, double* out) { \
    return guarded([&] {                                                          \
      need(h, "H");                                                               \
      need(g, "G");                                                               \
      need(out, "output");                                                        \
      *out = loglim::fn(h->g, g->g);                                              \
    });                                                                           \
  }

LOGLIM_DENSITY(loglim_t_density, t_density)
LOGLIM_DENSITY(loglim_d_density, d_density)
LOGLIM_DENSITY(loglim_h_density, h_density)
#undef LOGLIM_DENSITY

loglim_status loglim_tau_profile_json(const loglim_graph* g, size_t cap, char** out) {
  return guarded([&] {
    need(g, "graph");
    put_string(out, loglim::profile_to_json(loglim::tau_profile(g->g, cap)));
  });
}

loglim_status loglim_kappa(const loglim_graph* a, const loglim_graph* b, size_t cap,
                           double* out) {
  return guarded([&] {
    need(a, "graph");
    need(b, "graph");
    need(out, "output");
    *out = loglim::kappa(a->g, b->g, cap);
  });
}

// ---- distributions ---------------------------------------------------------------

loglim_status loglim_dist_create(size_t k1, size_t k2, const double* p, loglim_dist** out) {
  return make_dist(out, [&] {
    need(p, "table");
    return loglim::JointDistribution(k1, k2, std::vector<double>(p, p + k1 * k2));
  });
}

loglim_status loglim_dist_from_spec(const char* spec, loglim_dist** out) {
  return make_dist(out, [&] {
    need(spec, "spec");
    return loglim::resolve_distribution(spec);
  });
}

loglim_status loglim_dist_from_json(const char* json, loglim_dist** out) {
  return make_dist(out, [&] {
    need(json, "json");
    return loglim::distribution_from_json(json);
  });
}

loglim_status loglim_dist_to_json(const loglim_dist* x, char** out) {
  return guarded([&] {
    need(x, "distribution");
    put_string(out, loglim::distribution_to_json(x->x));
  });
}

loglim_status loglim_dist_from_graph(const loglim_graph* g, loglim_dist** out) {
  return make_dist(out, [&] {
    need(g, "graph");
    return loglim::from_graph(g->g);
  });
}

loglim_status loglim_dist_product(const loglim_dist* x, const loglim_dist* y,
                                  loglim_dist** out) {
  return make_dist(out, [&] {
    need(x, "distribution");
    need(y, "distribution");
    return loglim::product(x->x, y->x);
  });
}

void loglim_dist_free(loglim_dist* x) { delete x; }

loglim_status loglim_dist_entropy(const loglim_dist* x, int which, double* out) {
  return guarded([&] {
    need(x, "distribution");
    need(out, "output");
    switch (which) {
      case 0: *out = loglim::joint_entropy(x->x); break;
      case 1: *out = loglim::entropy1(x->x); break;
      case 2: *out = loglim::entropy2(x->x); break;
      default: loglim::fail(loglim::ErrorCode::InvalidArgument, "which must be 0, 1 or 2");
    }
  });
}

loglim_status loglim_dist_mutual_information(const loglim_dist* x, double* out) {
  return guarded([&] {
    need(x, "distribution");
    need(out, "output");
    *out = loglim::mutual_information(x->x);
  });
}

// ---- maximum entropy ----------------------------------------------------------------

void loglim_maxent_options_default(loglim_maxent_options* options) {
  if (!options) return;
  const loglim::MaxEntOptions d;
  options->tol = d.tol;
  options->max_sweeps = d.max_sweeps;
  options->cell_cap = d.cell_cap;
}

loglim_status loglim_maxent(const loglim_graph* h, const loglim_dist* x,
                            const loglim_maxent_options* options,
                            loglim_maxent_report* report) {
  bool converged = true;
  const loglim_status st = guarded([&] {
    need(h, "H");
    need(x, "distribution");
    need(report, "report");
    loglim::MaxEntOptions o;
    if (options) {
      o.tol = options->tol;
      o.max_sweeps = options->max_sweeps;
      o.cell_cap = options->cell_cap;
    }
    const loglim::MaxEntSolution s = loglim::maxent(h->g, x->x, o);
    report->m = s.m_value;
    report->d_star = s.d_star;
    report->t_star = s.t_star;
    report->h_star = s.h_star;
    report->residual = s.residual;
    report->gibbs_error = s.gibbs_reconstruction_error();
    report->iterations = s.iterations;
    report->converged = s.converged;
    converged = s.converged;
  });
  if (st != LOGLIM_OK) return st;
  if (!converged) {
    last_error = "maxent did not reach the tolerance within max_sweeps";
    return LOGLIM_ERR_NOT_CONVERGED;
  }
  return LOGLIM_OK;
}

loglim_status loglim_sidorenko_entropy_check(const loglim_graph* h, const loglim_dist* x,
                                             double* lhs, double* rhs, int* holds) {
  return guarded([&] {
    need(h, "H");
    need(x, "distribution");
    const loglim::SidorenkoCheck c = loglim::sidorenko_entropy_check(h->g, x->x);
    if (lhs) *lhs = c.lhs;
    if (rhs) *rhs = c.rhs;
    if (holds) *holds = c.holds;
  });
}

// ---- groups ------------------------------------------------------------------------

loglim_status loglim_group_from_spec(const char* spec, loglim_group** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "output");
    *out = new loglim_group{loglim::resolve_group(spec), std::nullopt};
  });
}

loglim_status loglim_group_from_json(const char* json, loglim_group** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "output");
    *out = new loglim_group{loglim::group_from_json(json), std::nullopt};
  });
}

loglim_status loglim_group_to_json(const loglim_group* g, char** out) {
  return guarded([&] {
    need(g, "group");
    put_string(out, loglim::group_to_json(*g->g));
  });
}

void loglim_group_free(loglim_group* g) { delete g; }

size_t loglim_group_order(const loglim_group* g) { return g ? g->g->order() : 0; }

loglim_status loglim_subgroup_generated(const loglim_group* g, const uint32_t* generators,
                                        size_t k, loglim_subgroup** out) {
  return guarded([&] {
    need(g, "group");
    need(out, "output");
    if (k > 0) need(generators, "generators");
    for (size_t i = 0; i < k; ++i)
      if (generators[i] >= g->g->order())
        loglim::fail(loglim::ErrorCode::IndexOutOfRange,
                     "generator " + std::to_string(generators[i]) + " is not a group element");
    *out = new loglim_subgroup{
        loglim::generated_subgroup(g->g, std::span<const uint32_t>(generators, k))};
  });
}

void loglim_subgroup_free(loglim_subgroup* s) { delete s; }

size_t loglim_subgroup_order(const loglim_subgroup* s) { return s ? s->s.order() : 0; }

loglim_status loglim_subgroup_elements(const loglim_subgroup* s, uint32_t* buf, size_t cap,
                                       size_t* count) {
  return guarded([&] {
    need(s, "subgroup");
    need(count, "count");
    const auto el = s->s.elements();
    *count = el.size();
    if (cap > 0) need(buf, "buffer");
    for (size_t i = 0; i < el.size() && i < cap; ++i) buf[i] = el[i];
  });
}

loglim_status loglim_group_subgroup_count(const loglim_group* g, size_t* count) {
  return guarded([&] {
    need(g, "group");
    need(count, "count");
    auto* mg = const_cast<loglim_group*>(g);
    if (!mg->subgroups) mg->subgroups = loglim::all_subgroups(g->g);
    *count = mg->subgroups->size();
  });
}

loglim_status loglim_group_subgroup_at(const loglim_group* g, size_t index,
                                       loglim_subgroup** out) {
  return guarded([&] {
    need(g, "group");
    need(out, "output");
    auto* mg = const_cast<loglim_group*>(g);
    if (!mg->subgroups) mg->subgroups = loglim::all_subgroups(g->g);
    if (index >= mg->subgroups->size())
      loglim::fail(loglim::ErrorCode::IndexOutOfRange, "subgroup index out of range");
    *out = new loglim_subgroup{(*mg->subgroups)[index]};
  });
}

loglim_status loglim_heisenberg(size_t p, loglim_group** group, loglim_subgroup** t1,
                                loglim_subgroup** t2) {
  return guarded([&] {
    const loglim::HeisenbergGroup h = loglim::heisenberg(p);
    if (group) *group = new loglim_group{h.group, std::nullopt};
    if (t1) *t1 = new loglim_subgroup{h.t1};
    if (t2) *t2 = new loglim_subgroup{h.t2};
  });
}

loglim_status loglim_projective_plane(size_t p, loglim_graph** out) {
  return make_graph(out, [&] { return loglim::projective_plane_incidence(p); });
}

loglim_status loglim_coset_graph(const loglim_subgroup* t1, const loglim_subgroup* t2,
                                 loglim_graph** out) {
  return make_graph(out, [&] {
    need(t1, "T1");
    need(t2, "T2");
    return loglim::coset_graph(t1->s, t2->s);
  });
}

loglim_status loglim_w_count(const loglim_graph* h, const loglim_subgroup* t1,
                             const loglim_subgroup* t2, char** out) {
  return guarded([&] {
    need(h, "H");
    need(t1, "T1");
    need(t2, "T2");
    put_string(out, loglim::to_string(loglim::w_count(h->g, t1->s, t2->s)));
  });
}

loglim_status loglim_t_via_w(const loglim_graph* h, const loglim_subgroup* t1,
                             const loglim_subgroup* t2, char** out) {
  return guarded([&] {
    need(h, "H");
    need(t1, "T1");
    need(t2, "T2");
    put_string(out, loglim::to_string(loglim::t_via_w(h->g, t1->s, t2->s)));
  });
}

loglim_status loglim_sidorenko_sweep_csv(size_t max_order, char** out) {
  return guarded([&] {
    const auto rows = loglim::sidorenko_density_sweep(loglim::catalog_triples(max_order),
                                                      loglim::sidorenko_families());
    put_string(out, loglim::sweep_csv(rows));
  });
}

// ---- quasi-random limit ---------------------------------------------------------------

loglim_status loglim_quasi_R(const loglim_graph* h, const char* beta, const char* alpha,
                             char** exact, double* value) {
  return guarded([&] {
    need(h, "H");
    const loglim::Rational r = loglim::R_exact(quasi(beta, alpha), h->g);
    if (value) *value = loglim::to_double(r);
    if (exact) *exact = dup_string(loglim::to_string(r));
  });
}

loglim_status loglim_quasi_D(const loglim_graph* h, const char* beta, const char* alpha,
                             char** exact) {
  return guarded([&] {
    need(h, "H");
    put_string(exact, loglim::to_string(loglim::D_value(quasi(beta, alpha), h->g)));
  });
}

loglim_status loglim_quasi_M(const loglim_graph* h, const char* beta, const char* alpha,
                             char** exact) {
  return guarded([&] {
    need(h, "H");
    put_string(exact, loglim::to_string(loglim::M_value(quasi(beta, alpha), h->g)));
  });
}

loglim_status loglim_quasi_profile_json(const char* beta, const char* alpha, size_t cap,
                                        char** out) {
  return guarded([&] {
    put_string(out, loglim::profile_to_json(loglim::R_profile(quasi(beta, alpha), cap)));
  });
}

loglim_status loglim_random_sample(uint64_t n, const char* beta, const char* alpha,
                                   uint64_t seed, uint64_t trial, loglim_graph** out) {
  return make_graph(out, [&] {
    const loglim::RandomModelParams m{n, quasi(beta, alpha), seed, 1};
    return loglim::sample_trial(m, trial);
  });
}

loglim_status loglim_convergence_csv(const loglim_graph* h, const char* beta, const char* alpha,
                                     const uint64_t* n_list, size_t count, size_t trials,
                                     uint64_t seed, char** out) {
  return guarded([&] {
    need(h, "H");
    if (count > 0) need(n_list, "n list");
    const auto rows = loglim::convergence_report(
        h->g, quasi(beta, alpha), std::vector<uint64_t>(n_list, n_list + count), trials, seed);
    put_string(out, loglim::convergence_csv(rows));
  });
}

// ---- type graphs and sparsity -------------------------------------------------------------

loglim_status loglim_type_graph(const loglim_dist* nu, size_t N, loglim_graph** out) {
  return make_graph(out, [&] {
    need(nu, "distribution");
    return loglim::type_graph(nu->x, N);
  });
}

loglim_status loglim_main_theorem_csv(const loglim_dist* nu, const loglim_graph* h,
                                      const size_t* Ns, size_t count, char** out) {
  return guarded([&] {
    need(nu, "distribution");
    need(h, "H");
    if (count > 0) need(Ns, "N list");
    const auto rows =
        loglim::main_theorem_experiment(nu->x, h->g, std::vector<size_t>(Ns, Ns + count));
    put_string(out, loglim::main_theorem_csv(rows));
  });
}

loglim_status loglim_sparsity_json(const loglim_graph* g, size_t n_max, char** out) {
  return guarded([&] {
    need(g, "graph");
    put_string(out, loglim::sparsity_to_json(loglim::sparsity_report(g->g, n_max)));
  });
}

}  // extern "C"
