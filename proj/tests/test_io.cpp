#include <limits>
#include <random>

#include "check.hpp"
#include "doctest.h"
#include "loglim/io.hpp"
#include "support.hpp"

using namespace loglim;
using check::error_of;

TEST_SUITE("io") {

TEST_CASE("graph round trip") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const BipartiteGraph g = gen::graph(rng, 1, 6, 1, 6, 0.4);
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
}

TEST_CASE("distribution round trip") {
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 20; ++rep) {
    const JointDistribution x = gen::distribution(rng);
    CHECK(distribution_from_json(distribution_to_json(x)) == x);
  }
  const JointDistribution r = resolve_distribution("graph:path3");
  CHECK(r.is_rational());
  CHECK(distribution_from_json(distribution_to_json(r)) == r);
}

TEST_CASE("group round trip") {
  const GroupPtr g = resolve_group("dihedral:5");
  const GroupPtr back = group_from_json(group_to_json(*g));
  CHECK(back->table() == g->table());
}

TEST_CASE("rejects malformed input") {
  CHECK(error_of([] { graph_from_json(R"({"n1":1,"n2":1,"edges":[[0,0]],"extra":1})"); }) ==
        ErrorCode::Parse);
  CHECK(error_of([] { graph_from_json(R"({"n1":1,"edges":[[0,0]]})"); }) == ErrorCode::Parse);
  CHECK(error_of([] { graph_from_json("{"); }) == ErrorCode::Parse);
  CHECK(error_of([] { graph_from_json(R"({"n1":1,"n2":1,"edges":[[0,1]]})"); }) ==
        ErrorCode::IndexOutOfRange);
  CHECK(error_of([] { distribution_from_json(R"({"k1":1,"k2":1,"p":[[1]],"q":0})"); }) ==
        ErrorCode::Parse);
  CHECK(error_of([] { group_from_json(R"({"order":2,"table":[[0,1],[1,0]],"name":"z"})"); }) ==
        ErrorCode::Parse);
  CHECK(error_of([] { read_file("/nonexistent/file.json"); }) == ErrorCode::Io);
}

TEST_CASE("named objects") {
  CHECK(resolve_graph("c4") == even_cycle(4));
  CHECK(resolve_graph("p1") == single_edge());
  CHECK(resolve_graph("path2") == path(2));
  CHECK(resolve_graph("rpath2") == path(2, Side::Two));
  CHECK(resolve_graph("k2,3") == complete(2, 3));
  CHECK(resolve_graph("pg:2").edge_count() == 21);
  CHECK(resolve_graph("heisenberg:3").n1() == 9);
  CHECK(resolve_distribution("diag2") == uniform_diagonal(2));
  CHECK(resolve_distribution("unif2x3") == uniform_product(2, 3));
  CHECK(resolve_group("q8")->order() == 8);
  CHECK(error_of([] { resolve_graph("nonsense"); }) == ErrorCode::Parse);
  CHECK(error_of([] { resolve_graph("c5"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("0.75") == Rational(3, 4));
  CHECK(parse_rational("2") == 2);
  CHECK(error_of([] { parse_rational("x"); }) == ErrorCode::Parse);
  CHECK(error_of([] { parse_rational("1/0"); }) == ErrorCode::Parse);
}

TEST_CASE("reports") {
  CHECK(format_double(0.5) == "0.5");
  const std::string csv = sweep_csv({});
  CHECK(csv.rfind("group,t1,t2,h_key,h,t,bound,margin", 0) == 0);
  SparsityReport r = sparsity_report(even_cycle(6), 3);
  CHECK(sparsity_to_json(r).find("null") == std::string::npos);
  r.beta_hat = -std::numeric_limits<double>::infinity();
  CHECK(sparsity_to_json(r).find("\"beta_hat\":null") != std::string::npos);
}

}  // TEST_SUITE
