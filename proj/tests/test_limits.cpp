#include <cmath>
#include <random>

#include "check.hpp"
#include "doctest.h"
#include "loglim/limits.hpp"
#include "support.hpp"

using namespace loglim;
using check::error_of;

namespace {

Rational q(long a, long b) { return Rational(a, b); }

}  // namespace

TEST_SUITE("limits") {

TEST_CASE("quasi params") {
  CHECK_NOTHROW(QuasiParams(1, q(1, 2)));
  CHECK(error_of([] { QuasiParams(0, q(1, 2)); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { QuasiParams(q(1, 2), 1); }) == ErrorCode::InvalidArgument);
  CHECK(QuasiParams(q(1, 2), q(1, 3)).alpha2() == q(2, 3));
}

TEST_CASE("homomorphic images") {
  CHECK(homomorphic_images(single_edge()).size() == 1);
  const auto c4 = homomorphic_images(even_cycle(4));
  // C4, P2 from either side, P1.
  CHECK(c4.size() == 4);
  CHECK(c4.front() == canonical_form(even_cycle(4)));
  CHECK(homomorphic_images(path(2)).size() == 2);
  for (const BipartiteGraph& img : homomorphic_images(complete(2, 3))) {
    CHECK(img.is_complete());
    CHECK_FALSE(img.has_isolated_vertex());
  }
}

TEST_CASE("R values") {
  const QuasiParams half(q(1, 2), q(1, 2));
  for (const BipartiteGraph& h : {even_cycle(4), path(3), complete(2, 3), disjoint_union(even_cycle(4), single_edge())})
    CHECK(R_exact(half, h) == Rational(BigInt(h.vertex_count() - h.component_count())));
  CHECK(R_exact(QuasiParams(q(3, 4), q(1, 2)), even_cycle(4)) == 4);
  CHECK(R_value(QuasiParams(q(3, 4), q(1, 2)), even_cycle(4)) == 4.0);
  for (const Rational& b : {q(1, 5), q(1, 2), q(9, 10), Rational(1)})
    CHECK(R_exact(QuasiParams(b, q(1, 3)), single_edge()) == 1);
  CHECK(R_exact(QuasiParams(1, q(1, 3)), complete(2, 3)) == 6);
}

TEST_CASE("R bounds and rearrangement") {
  for (const TestGraph& t : enumerate_test_graphs(6))
    for (const Rational& b : {q(1, 4), q(1, 2), q(3, 4)})
      for (const Rational& a : {q(1, 4), q(1, 2), q(2, 3)}) {
        const QuasiParams p(b, a);
        const Rational r = R_exact(p, t.graph);
        CHECK(r >= 0);
        CHECK(r <= Rational(BigInt(t.graph.edge_count())));
        const ImageOptimum o = max_image_D(p, t.graph);
        CHECK(o.max_d + (1 - b) * r ==
              a * Rational(BigInt(t.graph.n1())) + (1 - a) * Rational(BigInt(t.graph.n2())));
        CHECK(M_value(p, o.argmax) > 0);
      }
}

TEST_CASE("D and M") {
  const QuasiParams p(q(1, 2), q(1, 2));
  CHECK(D_value(p, even_cycle(4)) == 0);
  CHECK(D_value(p, single_edge()) == q(1, 2));
  CHECK(M_value(p, even_cycle(4)) == 0);
  CHECK(M_value(p, single_edge()) == q(1, 2));
}

TEST_CASE("R profile") {
  const LimitProfile dense = R_profile(QuasiParams(1, q(1, 2)), 5);
  const auto graphs = enumerate_test_graphs(5);
  REQUIRE(dense.entries.size() == graphs.size());
  for (const TestGraph& t : graphs) CHECK(dense.entries.at(t.key) == double(t.graph.edge_count()));
  const LimitProfile sparse = R_profile(QuasiParams(q(3, 4), q(1, 2)), 4);
  CHECK(sparse.entries.at(canonical_key(even_cycle(4))) == 4.0);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(g_n_quasi(QuasiParams(q(1, 2), q(1, 2)), n) >= 0);
  // On the quasi-random profile g_n = 1 / (1 - beta) for every n.
  for (const Rational& b : {q(1, 3), q(1, 2), q(3, 4)}) {
    const QuasiParams p(b, q(1, 2));
    for (std::size_t n = 2; n <= 6; ++n) CHECK(1 - 1 / g_n_quasi(p, n) == doctest::Approx(to_double(b)));
  }
}

TEST_CASE("sparsity exponents") {
  CHECK(beta_v(complete(2, 3)) == doctest::Approx(1));
  CHECK(beta_v(even_cycle(6)) == doctest::Approx(std::log(6.0) / std::log(9.0)));
  CHECK(beta_e(even_cycle(6)) == doctest::Approx(std::log(6.0) / std::log(9.0)));
  // Star K_{1,3} with a pendant path: skewed degrees.
  const BipartiteGraph skew(3, 4, {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(beta_e(skew) > beta_v(skew));
  CHECK(error_of([] { beta_v(single_edge()); }) == ErrorCode::InvalidArgument);
  CHECK(beta_hat(even_cycle(6), 20) == doctest::Approx(std::log(6.0) / std::log(9.0)).epsilon(0.02));
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 30; ++rep) {
    const BipartiteGraph g = gen::graph(rng, 2, 7, 2, 7, 0.5);
    if (g.is_complete()) continue;
    const double bv = beta_v(g);
    CHECK(bv > 0);
    CHECK(bv <= beta_e(g) + 1e-12);
    CHECK(beta_e(g) <= 1 + 1e-12);
    CHECK(beta_hat(g, 10) <= bv + 1e-9);
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(g_n_from_h(g, n) >= -1e-9);
      CHECK(g_n_from_h(g, n) == doctest::Approx(g_n_codegree(g, n)).epsilon(1e-9));
    }
  }
}

TEST_CASE("sparsity report") {
  const SparsityReport r = sparsity_report(even_cycle(6), 8);
  CHECK(r.g_values.size() == 8);
  CHECK(r.beta_v == doctest::Approx(r.beta_e));
  CHECK(r.beta_hat == doctest::Approx(beta_hat(even_cycle(6), 8)));
}

TEST_CASE("type graphs") {
  const JointDistribution diag = uniform_diagonal(2);
  const BipartiteGraph g = type_graph(diag, 4);
  CHECK(g.n1() == 6);
  CHECK(g.n2() == 6);
  CHECK(g.edge_count() == 6);
  CHECK(h_density(even_cycle(4), g) == doctest::Approx(3).epsilon(1e-12));
  const JointDistribution u = uniform_product(2, 2);
  CHECK_FALSE(type_feasible(u, 2));
  CHECK(type_feasible(u, 4));
  CHECK(error_of([&] { type_graph(u, 2); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([&] { type_graph(JointDistribution(2, 2, {0.25, 0.25, 0.25, 0.25}), 4); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_of([&] { type_graph(u, 40, 100); }) == ErrorCode::CapExceeded);
  const BipartiteGraph t = type_graph(u, 4);
  // Balanced strings of length 4; pairs with every joint cell hit once.
  CHECK(t.n1() == 6);
  CHECK(t.edge_count() == 6 * 4);
  for (std::uint32_t v = 0; v < t.n1(); ++v) CHECK(t.degree(Side::One, v) == 4);
  const auto rows = main_theorem_experiment(diag, even_cycle(4), {4, 8});
  REQUIRE(rows.size() == 2);
  for (const TypeGraphRow& r : rows) CHECK(std::abs(r.gap) < 1e-9);
}

}  // TEST_SUITE
