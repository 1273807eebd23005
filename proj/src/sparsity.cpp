#include <cmath>
#include <limits>

#include "loglim/error.hpp"
#include "loglim/limits.hpp"

namespace loglim {

namespace {

void require_nondegenerate(const BipartiteGraph& g) {
  if (!g.has_edges()) fail(ErrorCode::InvalidArgument, "sparsity needs a graph with an edge");
  if (g.n1() * g.n2() < 2)
    fail(ErrorCode::InvalidArgument, "sparsity is undefined when both classes are singletons");
}

// log(sum_{v,w} A_{vw}^n) - log(sum_v A_{vv}^n) over pairs in class s.
double codegree_term(const BipartiteGraph& g, Side s, std::size_t n) {
  const std::size_t k = g.size(s);
  const std::size_t m = g.size(other(s));
  std::vector<std::vector<bool>> row(k, std::vector<bool>(m, false));
  for (std::uint32_t v = 0; v < k; ++v)
    for (std::uint32_t w : g.neighbors(s, v)) row[v][w] = true;
  const unsigned e = static_cast<unsigned>(n);
  BigInt pairs = 0, diag = 0;
  for (std::size_t v = 0; v < k; ++v)
    for (std::size_t w = 0; w < k; ++w) {
      std::uint64_t a = 0;
      for (std::size_t x = 0; x < m; ++x) a += row[v][x] && row[w][x];
      if (a == 0) continue;
      const BigInt p = pow_big(a, e);
      pairs += p;
      if (v == w) diag += p;
    }
  return log_big(pairs) - log_big(diag);
}

}  // namespace

double beta_v(const BipartiteGraph& g) {
  require_nondegenerate(g);
  return std::log(double(g.edge_count())) /
         (std::log(double(g.n1())) + std::log(double(g.n2())));
}

double beta_e(const BipartiteGraph& g) {
  require_nondegenerate(g);
  const JointDistribution x = from_graph(g);
  const double denom = entropy1(x) + entropy2(x);
  if (denom <= 0)
    fail(ErrorCode::InvalidArgument, "beta_e is undefined for a single edge");
  return std::log(double(g.edge_count())) / denom;
}

double g_n_from_h(const BipartiteGraph& g, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "g_n needs n >= 1");
  return h_density(complete(2, n), g) + h_density(complete(n, 2), g) -
         h_density(complete(1, n), g) - h_density(complete(n, 1), g);
}

double t_n_codegree(const BipartiteGraph& g, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "T_n needs n >= 1");
  if (!g.has_edges()) fail(ErrorCode::InvalidArgument, "T_n needs a graph with an edge");
  return codegree_term(g, Side::One, n) + codegree_term(g, Side::Two, n);
}

double g_n_codegree(const BipartiteGraph& g, std::size_t n) {
  require_nondegenerate(g);
  if (g.is_complete())
    fail(ErrorCode::InvalidArgument, "codegree form of g_n needs a non-complete graph");
  const double logv = std::log(double(g.n1())) + std::log(double(g.n2()));
  return (logv - t_n_codegree(g, n)) / (logv - std::log(double(g.edge_count())));
}

double beta_hat(const BipartiteGraph& g, std::size_t n_max) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double gn = g_n_from_h(g, n);
    if (gn <= 0) continue;
    best = std::max(best, 1.0 - 1.0 / gn);
  }
  return best;
}

SparsityReport sparsity_report(const BipartiteGraph& g, std::size_t n_max) {
  SparsityReport r;
  r.beta_v = beta_v(g);
  r.beta_e = beta_e(g);
  r.beta_hat = -std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double gn = g_n_from_h(g, n);
    r.g_values[n] = gn;
    r.t_values[n] = t_n_codegree(g, n);
    if (gn > 0) r.beta_hat = std::max(r.beta_hat, 1.0 - 1.0 / gn);
  }
  return r;
}

}  // namespace loglim
