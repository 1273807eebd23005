#include "loglim/bgraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "loglim/error.hpp"

namespace loglim {

void validate(std::size_t n1, std::size_t n2, std::span<const Edge> edges) {
  if (n1 == 0 || n2 == 0)
    fail(ErrorCode::InvalidArgument, "both vertex classes must be non-empty");
  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (const Edge& e : sorted) {
    if (e.u >= n1 || e.v >= n2) {
      std::ostringstream os;
      os << "edge (" << e.u << "," << e.v << ") out of range for n1=" << n1
         << ", n2=" << n2;
      fail(ErrorCode::IndexOutOfRange, os.str());
    }
  }
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    std::ostringstream os;
    os << "duplicate edge (" << dup->u << "," << dup->v << ")";
    fail(ErrorCode::DuplicateEdge, os.str());
  }
}

BipartiteGraph::BipartiteGraph(std::size_t n1, std::size_t n2,
                               std::vector<Edge> edges)
    : n1_(n1), n2_(n2), edges_(std::move(edges)) {
  validate(n1_, n2_, edges_);
  std::sort(edges_.begin(), edges_.end());
  adj1_.resize(n1_);
  adj2_.resize(n2_);
  for (const Edge& e : edges_) {
    adj1_[e.u].push_back(e.v);
    adj2_[e.v].push_back(e.u);
  }
  for (auto& row : adj2_) std::sort(row.begin(), row.end());
}

std::span<const std::uint32_t> BipartiteGraph::neighbors(
    Side s, std::uint32_t i) const {
  const auto& adj = s == Side::One ? adj1_ : adj2_;
  if (i >= adj.size())
    fail(ErrorCode::IndexOutOfRange, "vertex index out of range");
  return adj[i];
}

std::size_t BipartiteGraph::max_degree(Side s) const {
  const auto& adj = s == Side::One ? adj1_ : adj2_;
  std::size_t best = 0;
  for (const auto& row : adj) best = std::max(best, row.size());
  return best;
}

bool BipartiteGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  if (u >= n1_) return false;
  const auto& row = adj1_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

bool BipartiteGraph::has_isolated_vertex() const {
  auto empty = [](const auto& row) { return row.empty(); };
  return std::any_of(adj1_.begin(), adj1_.end(), empty) ||
         std::any_of(adj2_.begin(), adj2_.end(), empty);
}

std::size_t BipartiteGraph::component_count() const {
  std::vector<std::size_t> parent(n1_ + n2_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n1_ + n2_;
  for (const Edge& e : edges_) {
    const auto a = find(e.u), b = find(n1_ + e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

// ---- generators ---------------------------------------------------------

BipartiteGraph single_edge() { return BipartiteGraph(1, 1, {{0, 0}}); }

BipartiteGraph complete(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0)
    fail(ErrorCode::InvalidArgument, "complete(a,b) needs a,b >= 1");
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (std::uint32_t u = 0; u < a; ++u)
    for (std::uint32_t v = 0; v < b; ++v) edges.push_back({u, v});
  return BipartiteGraph(a, b, std::move(edges));
}

BipartiteGraph even_cycle(std::size_t length) {
  if (length < 4 || length % 2 != 0)
    fail(ErrorCode::InvalidArgument, "even_cycle needs an even length >= 4");
  const auto k = static_cast<std::uint32_t>(length / 2);
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < k; ++i) {
    edges.push_back({i, i});
    edges.push_back({(i + 1) % k, i});
  }
  return BipartiteGraph(k, k, std::move(edges));
}

BipartiteGraph path(std::size_t m, Side start) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "path(m) needs m >= 1");
  // Vertex j of the walk lies in `start` iff j is even; its index within the
  // class is j / 2.
  const std::size_t n_start = m / 2 + 1;
  const std::size_t n_other = (m + 1) / 2;
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < m; ++j) {
    const auto a = static_cast<std::uint32_t>(j / 2);        // start-class end
    const auto b = static_cast<std::uint32_t>(j / 2);        // other-class end
    const auto a_next = static_cast<std::uint32_t>((j + 1) / 2);
    // even j: (v_j in start, v_{j+1} in other); odd j: (v_{j+1} in start, v_j)
    const std::uint32_t s = (j % 2 == 0) ? a : a_next;
    if (start == Side::One)
      edges.push_back({s, b});
    else
      edges.push_back({b, s});
  }
  return start == Side::One ? BipartiteGraph(n_start, n_other, std::move(edges))
                            : BipartiteGraph(n_other, n_start, std::move(edges));
}

BipartiteGraph matching(std::size_t m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "matching(m) needs m >= 1");
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < m; ++i) edges.push_back({i, i});
  return BipartiteGraph(m, m, std::move(edges));
}

// ---- constructions --------------------------------------------------------

namespace {

void check_vertex_cap(const char* what, double n1, double n2, std::size_t cap) {
  if (n1 + n2 > static_cast<double>(cap))
    fail_cap(std::string(what) + " vertex cap", n1 + n2, static_cast<double>(cap));
}

}  // namespace

BipartiteGraph blow_up(const BipartiteGraph& g, std::size_t m, std::size_t n,
                       std::size_t vertex_cap) {
  if (m == 0 || n == 0)
    fail(ErrorCode::InvalidArgument, "blow_up needs m,n >= 1");
  check_vertex_cap("blow_up", double(g.n1()) * double(m),
                   double(g.n2()) * double(n), vertex_cap);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() * m * n);
  for (const Edge& e : g.edges())
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        edges.push_back({static_cast<std::uint32_t>(e.u * m + a),
                         static_cast<std::uint32_t>(e.v * n + b)});
  return BipartiteGraph(g.n1() * m, g.n2() * n, std::move(edges));
}

BipartiteGraph tensor_product(const BipartiteGraph& g1,
                              const BipartiteGraph& g2,
                              std::size_t vertex_cap) {
  check_vertex_cap("tensor_product", double(g1.n1()) * double(g2.n1()),
                   double(g1.n2()) * double(g2.n2()), vertex_cap);
  const auto w1 = static_cast<std::uint32_t>(g2.n1());
  const auto w2 = static_cast<std::uint32_t>(g2.n2());
  std::vector<Edge> edges;
  edges.reserve(g1.edge_count() * g2.edge_count());
  for (const Edge& a : g1.edges())
    for (const Edge& b : g2.edges())
      edges.push_back({a.u * w1 + b.u, a.v * w2 + b.v});
  return BipartiteGraph(g1.n1() * g2.n1(), g1.n2() * g2.n2(), std::move(edges));
}

BipartiteGraph disjoint_union(const BipartiteGraph& h1,
                              const BipartiteGraph& h2) {
  const auto s1 = static_cast<std::uint32_t>(h1.n1());
  const auto s2 = static_cast<std::uint32_t>(h1.n2());
  std::vector<Edge> edges(h1.edges().begin(), h1.edges().end());
  for (const Edge& e : h2.edges()) edges.push_back({e.u + s1, e.v + s2});
  return BipartiteGraph(h1.n1() + h2.n1(), h1.n2() + h2.n2(), std::move(edges));
}

namespace {

// Relabels h2's vertices into the disjoint union with h1, then merges the
// pairs in `merge1` (class 1) and `merge2` (class 2): h2 vertex -> h1 vertex.
BipartiteGraph merge_into(const BipartiteGraph& h1, const BipartiteGraph& h2,
                          const std::vector<std::pair<std::uint32_t, std::uint32_t>>& merge1,
                          const std::vector<std::pair<std::uint32_t, std::uint32_t>>& merge2) {
  auto remap = [](std::size_t base, std::size_t count,
                  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& merges) {
    std::vector<std::uint32_t> map(count, 0);
    std::vector<bool> merged(count, false);
    for (auto [from, to] : merges) {
      map[from] = to;
      merged[from] = true;
    }
    auto next = static_cast<std::uint32_t>(base);
    for (std::size_t i = 0; i < count; ++i)
      if (!merged[i]) map[i] = next++;
    return std::make_pair(map, static_cast<std::size_t>(next));
  };
  auto [map1, n1] = remap(h1.n1(), h2.n1(), merge1);
  auto [map2, n2] = remap(h1.n2(), h2.n2(), merge2);
  std::vector<Edge> edges(h1.edges().begin(), h1.edges().end());
  for (const Edge& e : h2.edges()) edges.push_back({map1[e.u], map2[e.v]});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return BipartiteGraph(n1, n2, std::move(edges));
}

}  // namespace

BipartiteGraph glue_vertex(const BipartiteGraph& h1, const BipartiteGraph& h2,
                           Side side, std::uint32_t v1, std::uint32_t v2) {
  if (v1 >= h1.size(side) || v2 >= h2.size(side))
    fail(ErrorCode::IndexOutOfRange, "glue_vertex: vertex not in the named class");
  if (side == Side::One) return merge_into(h1, h2, {{v2, v1}}, {});
  return merge_into(h1, h2, {}, {{v2, v1}});
}

BipartiteGraph glue_edge(const BipartiteGraph& h1, const BipartiteGraph& h2,
                         std::size_t e1, std::size_t e2) {
  if (e1 >= h1.edge_count() || e2 >= h2.edge_count())
    fail(ErrorCode::IndexOutOfRange, "glue_edge: edge index out of range");
  const Edge a = h1.edges()[e1];
  const Edge b = h2.edges()[e2];
  return merge_into(h1, h2, {{b.u, a.u}}, {{b.v, a.v}});
}

BipartiteGraph symmetrize(
    std::size_t n,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> undirected) {
  std::vector<Edge> edges;
  for (auto [a, b] : undirected) {
    if (a == b) fail(ErrorCode::InvalidArgument, "symmetrize: loops are not allowed");
    edges.push_back({a, b});
    edges.push_back({b, a});
  }
  return BipartiteGraph(n, n, std::move(edges));
}

BipartiteGraph symmetrize(const std::vector<std::vector<int>>& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> undirected;
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency[i].size() != n)
      fail(ErrorCode::InvalidArgument, "symmetrize: adjacency must be square");
    if (adjacency[i][i] != 0)
      fail(ErrorCode::InvalidArgument, "symmetrize: loops are not allowed");
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((adjacency[i][j] != 0) != (adjacency[j][i] != 0))
        fail(ErrorCode::InvalidArgument, "symmetrize: adjacency must be symmetric");
      if (adjacency[i][j] != 0)
        undirected.emplace_back(static_cast<std::uint32_t>(i),
                                static_cast<std::uint32_t>(j));
    }
  }
  return symmetrize(n, undirected);
}

BipartiteGraph edge_subgraph(const BipartiteGraph& g,
                             const std::vector<bool>& keep) {
  if (keep.size() != g.edge_count())
    fail(ErrorCode::InvalidArgument, "edge_subgraph: mask size mismatch");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) edges.push_back(g.edges()[i]);
  return BipartiteGraph(g.n1(), g.n2(), std::move(edges));
}

BipartiteGraph drop_isolated(const BipartiteGraph& g) {
  std::vector<std::uint32_t> map1(g.n1()), map2(g.n2());
  std::uint32_t n1 = 0, n2 = 0;
  for (std::uint32_t u = 0; u < g.n1(); ++u)
    if (g.degree(Side::One, u) > 0) map1[u] = n1++;
  for (std::uint32_t v = 0; v < g.n2(); ++v)
    if (g.degree(Side::Two, v) > 0) map2[v] = n2++;
  if (n1 == 0 || n2 == 0)
    fail(ErrorCode::InvalidArgument, "drop_isolated: graph has no edges");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({map1[e.u], map2[e.v]});
  return BipartiteGraph(n1, n2, std::move(edges));
}

}  // namespace loglim
