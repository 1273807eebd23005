// Test-only oracles and random generators. Nothing here calls the code under
// test except the BipartiteGraph and JointDistribution constructors.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "loglim/bgraph.hpp"
#include "loglim/entropy.hpp"

namespace oracle {

using loglim::BigInt;
using loglim::BipartiteGraph;
using loglim::Edge;
using loglim::JointDistribution;

// Every label-preserving map, counted directly.
inline BigInt hom_count(const BipartiteGraph& h, const BipartiteGraph& g) {
  const std::size_t n = h.n1() + h.n2();
  std::vector<std::uint32_t> img(n, 0);
  BigInt count = 0;
  while (true) {
    bool ok = true;
    for (const Edge& e : h.edges())
      if (!g.has_edge(img[e.u], img[h.n1() + e.v])) {
        ok = false;
        break;
      }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n) {
      const std::size_t lim = i < h.n1() ? g.n1() : g.n2();
      if (++img[i] < lim) break;
      img[i++] = 0;
    }
    if (i == n) return count;
  }
}

inline BigInt injective_hom_count(const BipartiteGraph& h, const BipartiteGraph& g) {
  const std::size_t n = h.n1() + h.n2();
  std::vector<std::uint32_t> img(n, 0);
  BigInt count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a + 1; b < n && ok; ++b)
        if ((a < h.n1()) == (b < h.n1()) && img[a] == img[b]) ok = false;
    for (const Edge& e : h.edges())
      if (ok && !g.has_edge(img[e.u], img[h.n1() + e.v])) ok = false;
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n) {
      const std::size_t lim = i < h.n1() ? g.n1() : g.n2();
      if (++img[i] < lim) break;
      img[i++] = 0;
    }
    if (i == n) return count;
  }
}

// Row-major biadjacency bits minimised over both class permutations.
inline std::vector<bool> min_bitmap(const BipartiteGraph& g) {
  std::vector<std::uint32_t> p1(g.n1()), p2(g.n2());
  std::iota(p1.begin(), p1.end(), 0);
  std::vector<bool> best;
  do {
    std::iota(p2.begin(), p2.end(), 0);
    do {
      std::vector<bool> bits(g.n1() * g.n2(), false);
      for (const Edge& e : g.edges()) bits[p1[e.u] * g.n2() + p2[e.v]] = true;
      if (best.empty() || bits < best) best = bits;
    } while (std::next_permutation(p2.begin(), p2.end()));
  } while (std::next_permutation(p1.begin(), p1.end()));
  return best;
}

inline std::vector<bool> bitmap(const BipartiteGraph& g) {
  std::vector<bool> bits(g.n1() * g.n2(), false);
  for (const Edge& e : g.edges()) bits[e.u * g.n2() + e.v] = true;
  return bits;
}

// Isomorphism classes with an edge and no isolated vertex, n1 + n2 <= cap,
// found by canonicalising every labelled graph.
inline std::size_t count_test_graph_classes(std::size_t cap) {
  std::size_t total = 0;
  for (std::size_t n = 2; n <= cap; ++n)
    for (std::size_t n1 = 1; n1 < n; ++n1) {
      const std::size_t n2 = n - n1;
      std::set<std::vector<bool>> classes;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n1 * n2)); ++mask) {
        std::vector<Edge> edges;
        for (std::uint32_t u = 0; u < n1; ++u)
          for (std::uint32_t v = 0; v < n2; ++v)
            if (mask >> (u * n2 + v) & 1) edges.push_back({u, v});
        BipartiteGraph g(n1, n2, edges);
        if (g.has_isolated_vertex()) continue;
        classes.insert(min_bitmap(g));
      }
      total += classes.size();
    }
  return total;
}

inline double shannon(const std::vector<double>& p) {
  double h = 0;
  for (double v : p)
    if (v > 0) h -= v * std::log(v);
  return h;
}

// Plain cyclic IPF over an explicit state array, written independently of
// the library solver. Returns the entropy of the fitted table.
inline double brute_maxent_entropy(const BipartiteGraph& h, const JointDistribution& x,
                                   int sweeps = 20000, double tol = 1e-12) {
  const std::size_t n1 = h.n1(), n = h.n1() + h.n2();
  const std::size_t k1 = x.k1(), k2 = x.k2();
  std::size_t cells = 1;
  for (std::size_t i = 0; i < n; ++i) cells *= i < n1 ? k1 : k2;
  auto digit = [&](std::size_t cell, std::size_t vertex) {
    for (std::size_t i = n; i-- > 0;) {
      const std::size_t base = i < n1 ? k1 : k2;
      if (i == vertex) return cell % base;
      cell /= base;
    }
    return std::size_t{0};
  };
  std::vector<double> t(cells, 1.0);
  for (std::size_t c = 0; c < cells; ++c)
    for (const Edge& e : h.edges())
      if (x.at(digit(c, e.u), digit(c, n1 + e.v)) == 0) t[c] = 0;
  const double z = std::accumulate(t.begin(), t.end(), 0.0);
  for (double& v : t) v /= z;
  for (int s = 0; s < sweeps; ++s) {
    double gap = 0;
    for (const Edge& e : h.edges()) {
      std::vector<double> m(k1 * k2, 0.0);
      for (std::size_t c = 0; c < cells; ++c) m[digit(c, e.u) * k2 + digit(c, n1 + e.v)] += t[c];
      for (std::size_t i = 0; i < k1 * k2; ++i) gap = std::max(gap, std::abs(m[i] - x.table()[i]));
      for (std::size_t c = 0; c < cells; ++c) {
        const std::size_t i = digit(c, e.u) * k2 + digit(c, n1 + e.v);
        if (m[i] > 0) t[c] *= x.table()[i] / m[i];
      }
    }
    if (gap < tol) break;
  }
  return shannon(t);
}

}  // namespace oracle

namespace gen {

using loglim::BipartiteGraph;
using loglim::Edge;
using loglim::JointDistribution;

// Random graph with n1 in [lo1, hi1], n2 in [lo2, hi2], each pair an edge
// with probability p; resampled until it has an edge.
inline BipartiteGraph graph(std::mt19937_64& rng, std::size_t lo1, std::size_t hi1,
                            std::size_t lo2, std::size_t hi2, double p) {
  std::uniform_int_distribution<std::size_t> d1(lo1, hi1), d2(lo2, hi2);
  std::bernoulli_distribution coin(p);
  while (true) {
    const std::size_t n1 = d1(rng), n2 = d2(rng);
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u < n1; ++u)
      for (std::uint32_t v = 0; v < n2; ++v)
        if (coin(rng)) edges.push_back({u, v});
    if (!edges.empty()) return BipartiteGraph(n1, n2, std::move(edges));
  }
}

// Same, with every vertex covered.
inline BipartiteGraph covered_graph(std::mt19937_64& rng, std::size_t lo1, std::size_t hi1,
                                    std::size_t lo2, std::size_t hi2, double p) {
  while (true) {
    BipartiteGraph g = graph(rng, lo1, hi1, lo2, hi2, p);
    if (!g.has_isolated_vertex()) return g;
  }
}

// Sub-edge-set of g on the same vertices, each edge kept with probability p.
inline BipartiteGraph edge_subset(std::mt19937_64& rng, const BipartiteGraph& g, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> keep;
  for (const Edge& e : g.edges())
    if (coin(rng)) keep.push_back(e);
  return BipartiteGraph(g.n1(), g.n2(), std::move(keep));
}

// Random table on k1 x k2 with k1, k2 in [2, kmax]; each cell is zero with
// probability `zero` (the table is resampled if a marginal loses a symbol).
inline JointDistribution distribution(std::mt19937_64& rng, std::size_t kmax = 3,
                                      double zero = 0.2) {
  std::uniform_int_distribution<std::size_t> dk(2, kmax);
  std::uniform_real_distribution<double> w(0.05, 1.0);
  std::bernoulli_distribution z(zero);
  while (true) {
    const std::size_t k1 = dk(rng), k2 = dk(rng);
    std::vector<double> p(k1 * k2);
    double s = 0;
    for (double& v : p) s += (v = z(rng) ? 0.0 : w(rng));
    std::vector<double> r(k1, 0), c(k2, 0);
    for (std::size_t i = 0; i < k1; ++i)
      for (std::size_t j = 0; j < k2; ++j) {
        r[i] += p[i * k2 + j];
        c[j] += p[i * k2 + j];
      }
    if (std::count(r.begin(), r.end(), 0.0) || std::count(c.begin(), c.end(), 0.0)) continue;
    for (double& v : p) v /= s;
    // Exact renormalisation so the constructor's sum check sees 1.
    double total = 0;
    for (double v : p) total += v;
    p.back() += 1.0 - total;
    if (p.back() < 0) continue;
    return JointDistribution(k1, k2, std::move(p));
  }
}

}  // namespace gen
