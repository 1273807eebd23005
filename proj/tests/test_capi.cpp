// Exercises the shared library through loglim.h only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "loglim.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  loglim_string_free(s);
  return out;
}

loglim_graph* graph(const char* spec) {
  loglim_graph* g = nullptr;
  REQUIRE(loglim_graph_from_spec(spec, &g) == LOGLIM_OK);
  return g;
}

loglim_dist* dist(const char* spec) {
  loglim_dist* x = nullptr;
  REQUIRE(loglim_dist_from_spec(spec, &x) == LOGLIM_OK);
  return x;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(loglim_status_name(LOGLIM_OK)) == "ok");
  CHECK(std::string(loglim_version()).size() > 0);
  const uint32_t bad[] = {2, 0};
  loglim_graph* g = nullptr;
  CHECK(loglim_graph_create(2, 1, bad, 1, &g) == LOGLIM_ERR_RANGE);
  CHECK(g == nullptr);
  CHECK(std::string(loglim_last_error()).size() > 0);
  const uint32_t dup[] = {0, 0, 0, 0};
  CHECK(loglim_graph_create(1, 1, dup, 2, &g) == LOGLIM_ERR_DUPLICATE);
  CHECK(loglim_graph_from_spec("nonsense", &g) == LOGLIM_ERR_PARSE);
  CHECK(loglim_graph_from_spec(nullptr, &g) == LOGLIM_ERR_INVALID);
  CHECK(loglim_graph_from_json("{\"n1\":1}", &g) == LOGLIM_ERR_PARSE);
  loglim_graph_free(nullptr);
}

TEST_CASE("graphs") {
  const uint32_t e[] = {0, 0, 0, 1, 1, 0, 1, 1};
  loglim_graph* k = nullptr;
  REQUIRE(loglim_graph_create(2, 2, e, 4, &k) == LOGLIM_OK);
  loglim_graph* c4 = graph("c4");
  int eq = 0;
  CHECK(loglim_graph_equal(k, c4, &eq) == LOGLIM_OK);
  CHECK(eq == 1);
  CHECK(loglim_graph_n1(c4) == 2);
  CHECK(loglim_graph_edge_count(c4) == 4);
  std::vector<uint32_t> buf(8);
  size_t count = 0;
  CHECK(loglim_graph_edges(c4, buf.data(), 4, &count) == LOGLIM_OK);
  CHECK(count == 4);
  char* s = nullptr;
  CHECK(loglim_hom_count(c4, k, &s) == LOGLIM_OK);
  CHECK(take(s) == "16");
  char* key1 = nullptr;
  char* key2 = nullptr;
  loglim_graph_canonical_key(k, &key1);
  loglim_graph_canonical_key(c4, &key2);
  CHECK(take(key1) == take(key2));

  loglim_graph* p1 = graph("p1");
  loglim_graph* b = nullptr;
  CHECK(loglim_graph_blow_up(p1, 2, 3, &b) == LOGLIM_OK);
  loglim_graph* k23 = graph("k2,3");
  CHECK(loglim_graph_equal(b, k23, &eq) == LOGLIM_OK);
  CHECK(eq == 1);
  loglim_graph* glued = nullptr;
  CHECK(loglim_graph_glue_vertex(p1, p1, 2, 0, 0, &glued) == LOGLIM_OK);
  loglim_graph* p2 = graph("path2");
  CHECK(loglim_graph_equal(glued, p2, &eq) == LOGLIM_OK);
  CHECK(eq == 1);
  loglim_graph* bad = nullptr;
  CHECK(loglim_graph_glue_vertex(p1, p1, 3, 0, 0, &bad) == LOGLIM_ERR_INVALID);
  CHECK(loglim_graph_glue_edge(p1, c4, 0, 9, &bad) == LOGLIM_ERR_RANGE);
  int tr = 0;
  CHECK(loglim_graph_is_edge_vertex_transitive(c4, &tr) == LOGLIM_OK);
  CHECK(tr == 1);

  char* js = nullptr;
  CHECK(loglim_graph_to_json(k23, &js) == LOGLIM_OK);
  loglim_graph* back = nullptr;
  CHECK(loglim_graph_from_json(js, &back) == LOGLIM_OK);
  loglim_string_free(js);
  CHECK(loglim_graph_equal(back, k23, &eq) == LOGLIM_OK);
  CHECK(eq == 1);
  double h = 0;
  CHECK(loglim_h_density(c4, k23, &h) == LOGLIM_OK);
  CHECK(h == 4.0);
  double kap = -1;
  CHECK(loglim_kappa(p1, p1, 4, &kap) == LOGLIM_OK);
  CHECK(kap == 0);
  for (loglim_graph* g : {k, c4, p1, b, k23, glued, p2, back}) loglim_graph_free(g);
}

TEST_CASE("heisenberg and groups") {
  loglim_group* u = nullptr;
  loglim_subgroup* t1 = nullptr;
  loglim_subgroup* t2 = nullptr;
  REQUIRE(loglim_heisenberg(3, &u, &t1, &t2) == LOGLIM_OK);
  CHECK(loglim_group_order(u) == 27);
  loglim_graph* g = nullptr;
  REQUIRE(loglim_coset_graph(t1, t2, &g) == LOGLIM_OK);
  loglim_graph* c4 = graph("c4");
  char* s = nullptr;
  CHECK(loglim_hom_count(c4, g, &s) == LOGLIM_OK);
  CHECK(take(s) == "135");
  CHECK(loglim_t_exact(c4, g, &s) == LOGLIM_OK);
  CHECK(take(s) == "5/243");
  CHECK(loglim_t_via_w(c4, t1, t2, &s) == LOGLIM_OK);
  CHECK(take(s) == "5/243");
  CHECK(loglim_heisenberg(4, nullptr, nullptr, nullptr) == LOGLIM_ERR_INVALID);

  loglim_group* z6 = nullptr;
  REQUIRE(loglim_group_from_spec("cyclic:6", &z6) == LOGLIM_OK);
  size_t n = 0;
  CHECK(loglim_group_subgroup_count(z6, &n) == LOGLIM_OK);
  CHECK(n == 4);
  loglim_subgroup* sub = nullptr;
  CHECK(loglim_group_subgroup_at(z6, 4, &sub) == LOGLIM_ERR_RANGE);
  const uint32_t gen[] = {2};
  CHECK(loglim_subgroup_generated(z6, gen, 1, &sub) == LOGLIM_OK);
  CHECK(loglim_subgroup_order(sub) == 3);
  char* js = nullptr;
  CHECK(loglim_group_to_json(z6, &js) == LOGLIM_OK);
  loglim_group* back = nullptr;
  CHECK(loglim_group_from_json(js, &back) == LOGLIM_OK);
  loglim_string_free(js);
  CHECK(loglim_group_order(back) == 6);

  loglim_graph* pg = nullptr;
  CHECK(loglim_projective_plane(3, &pg) == LOGLIM_OK);
  CHECK(loglim_graph_edge_count(pg) == 52);
  loglim_subgroup_free(sub);
  loglim_subgroup_free(t1);
  loglim_subgroup_free(t2);
  loglim_group_free(u);
  loglim_group_free(z6);
  loglim_group_free(back);
  for (loglim_graph* x : {g, c4, pg}) loglim_graph_free(x);
}

TEST_CASE("maxent") {
  loglim_graph* p2 = graph("path2");
  loglim_graph* c4 = graph("c4");
  loglim_dist* diag = dist("diag2");
  loglim_maxent_report r{};
  CHECK(loglim_maxent(p2, diag, nullptr, &r) == LOGLIM_OK);
  CHECK(r.h_star == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(loglim_maxent(c4, diag, nullptr, &r) == LOGLIM_OK);
  CHECK(r.h_star == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.m == doctest::Approx(std::log(2.0)));
  const double p[] = {0.5, 0.25, 0.0, 0.25};
  loglim_dist* x = nullptr;
  REQUIRE(loglim_dist_create(2, 2, p, &x) == LOGLIM_OK);
  loglim_maxent_options o;
  loglim_maxent_options_default(&o);
  o.max_sweeps = 1;
  o.tol = 1e-300;
  CHECK(loglim_maxent(c4, x, &o, &r) == LOGLIM_ERR_NOT_CONVERGED);
  CHECK(r.converged == 0);
  CHECK(r.iterations == 1);
  o.cell_cap = 2;
  CHECK(loglim_maxent(c4, x, &o, &r) == LOGLIM_ERR_CAP);
  double lhs = 0, rhs = 0;
  int holds = 0;
  CHECK(loglim_sidorenko_entropy_check(c4, x, &lhs, &rhs, &holds) == LOGLIM_OK);
  CHECK(holds == 1);
  double mi = 0;
  CHECK(loglim_dist_mutual_information(diag, &mi) == LOGLIM_OK);
  CHECK(mi == doctest::Approx(std::log(2.0)));
  CHECK(loglim_dist_entropy(diag, 3, &mi) == LOGLIM_ERR_INVALID);
  const double bad[] = {0.5, 0.5, 0.5, 0.5};
  loglim_dist* y = nullptr;
  CHECK(loglim_dist_create(2, 2, bad, &y) == LOGLIM_ERR_INVALID);
  loglim_dist_free(diag);
  loglim_dist_free(x);
  loglim_graph_free(p2);
  loglim_graph_free(c4);
}

TEST_CASE("quasi-random and random graphs") {
  loglim_graph* c4 = graph("c4");
  double v = 0;
  char* s = nullptr;
  CHECK(loglim_quasi_R(c4, "3/4", "1/2", &s, &v) == LOGLIM_OK);
  CHECK(take(s) == "4");
  CHECK(v == 4.0);
  CHECK(loglim_quasi_R(c4, "0.5", "0.5", nullptr, &v) == LOGLIM_OK);
  CHECK(v == 3.0);
  CHECK(loglim_quasi_R(c4, "2", "1/2", nullptr, &v) == LOGLIM_ERR_INVALID);
  CHECK(loglim_quasi_R(c4, "abc", "1/2", nullptr, &v) == LOGLIM_ERR_PARSE);
  loglim_graph* a = nullptr;
  loglim_graph* b = nullptr;
  CHECK(loglim_random_sample(400, "3/4", "1/2", 7, 2, &a) == LOGLIM_OK);
  CHECK(loglim_random_sample(400, "3/4", "1/2", 7, 2, &b) == LOGLIM_OK);
  int eq = 0;
  CHECK(loglim_graph_equal(a, b, &eq) == LOGLIM_OK);
  CHECK(eq == 1);
  const uint64_t ns[] = {100, 400};
  char* csv1 = nullptr;
  char* csv2 = nullptr;
  CHECK(loglim_convergence_csv(c4, "3/4", "1/2", ns, 2, 5, 1, &csv1) == LOGLIM_OK);
  CHECK(loglim_convergence_csv(c4, "3/4", "1/2", ns, 2, 5, 1, &csv2) == LOGLIM_OK);
  const std::string c1 = take(csv1);
  CHECK(c1 == take(csv2));
  CHECK(c1.rfind("n,median_h,q25,q75,R,median_abs_error,undefined\n", 0) == 0);
  loglim_graph_free(a);
  loglim_graph_free(b);
  loglim_graph_free(c4);
}

TEST_CASE("type graphs and sparsity") {
  loglim_dist* diag = dist("diag2");
  loglim_graph* t = nullptr;
  CHECK(loglim_type_graph(diag, 4, &t) == LOGLIM_OK);
  CHECK(loglim_graph_n1(t) == 6);
  CHECK(loglim_graph_edge_count(t) == 6);
  loglim_dist* u = dist("unif2x2");
  loglim_graph* bad = nullptr;
  CHECK(loglim_type_graph(u, 2, &bad) == LOGLIM_ERR_INVALID);
  loglim_graph* c6 = graph("c6");
  char* s = nullptr;
  CHECK(loglim_sparsity_json(c6, 5, &s) == LOGLIM_OK);
  CHECK(take(s).find("beta_hat") != std::string::npos);
  loglim_graph_free(t);
  loglim_graph_free(c6);
  loglim_dist_free(diag);
  loglim_dist_free(u);
}
