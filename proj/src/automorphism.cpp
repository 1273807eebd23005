#include <bit>
#include <map>
#include <optional>

#include "loglim/error.hpp"
#include "loglim/groups.hpp"

namespace loglim {

namespace {

using Mask = std::uint64_t;
using Perm = std::vector<std::uint32_t>;

// Unified numbering, class-1 vertices first; every mask fits one word.
class AutSearch {
 public:
  explicit AutSearch(const BipartiteGraph& g) : n_(g.vertex_count()), adj_(n_, 0) {
    for (const Edge& e : g.edges()) {
      const std::size_t v = g.n1() + e.v;
      adj_[e.u] |= Mask{1} << v;
      adj_[v] |= Mask{1} << e.u;
    }
    Mask one = 0;
    for (std::size_t x = 0; x < g.n1(); ++x) one |= Mask{1} << x;
    same_.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (((one >> x) & 1) == ((one >> y) & 1) &&
            std::popcount(adj_[x]) == std::popcount(adj_[y]))
          same_[x] |= Mask{1} << y;
  }

  std::size_t size() const { return n_; }

  // Automorphism sending a -> fa and b -> fb, if one exists.
  std::optional<Perm> find(std::uint32_t a, std::uint32_t fa, std::uint32_t b,
                           std::uint32_t fb) {
    order_ = bfs_from(a, b);
    map_.assign(n_, kUnset);
    used_ = 0;
    mapped_ = 0;
    if (!assign(a, fa)) return std::nullopt;
    if (map_[b] == kUnset) {
      if (!assign(b, fb)) return std::nullopt;
    } else if (map_[b] != fb) {
      return std::nullopt;
    }
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr std::uint32_t kUnset = ~std::uint32_t{0};

  std::vector<std::uint32_t> bfs_from(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint32_t> order;
    Mask seen = 0;
    auto push = [&](std::uint32_t x) {
      if (!((seen >> x) & 1)) {
        seen |= Mask{1} << x;
        order.push_back(x);
      }
    };
    push(a);
    push(b);
    for (std::uint32_t start = 0; start <= n_; ++start) {
      for (std::size_t i = 0; i < order.size(); ++i) {
        Mask nb = adj_[order[i]] & ~seen;
        while (nb) {
          push(static_cast<std::uint32_t>(std::countr_zero(nb)));
          nb &= nb - 1;
        }
      }
      if (start < n_) push(start);
    }
    return order;
  }

  bool consistent(std::uint32_t x, std::uint32_t c) const {
    if (!((same_[x] >> c) & 1) || ((used_ >> c) & 1)) return false;
    // Adjacency to every mapped vertex must be preserved.
    Mask nb = adj_[x] & mapped_;
    Mask image = 0;
    while (nb) {
      image |= Mask{1} << map_[std::countr_zero(nb)];
      nb &= nb - 1;
    }
    return (adj_[c] & used_) == image;
  }

  bool assign(std::uint32_t x, std::uint32_t c) {
    if (!consistent(x, c)) return false;
    map_[x] = c;
    used_ |= Mask{1} << c;
    mapped_ |= Mask{1} << x;
    return true;
  }

  void unassign(std::uint32_t x) {
    used_ &= ~(Mask{1} << map_[x]);
    mapped_ &= ~(Mask{1} << x);
    map_[x] = kUnset;
  }

  bool extend(std::size_t i) {
    while (i < order_.size() && map_[order_[i]] != kUnset) ++i;
    if (i == order_.size()) return true;
    const std::uint32_t x = order_[i];
    Mask cand = same_[x] & ~used_;
    while (cand) {
      const auto c = static_cast<std::uint32_t>(std::countr_zero(cand));
      cand &= cand - 1;
      if (!assign(x, c)) continue;
      if (extend(i + 1)) return true;
      unassign(x);
    }
    return false;
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::vector<Mask> same_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> map_;
  Mask used_ = 0;
  Mask mapped_ = 0;
};

}  // namespace

bool is_edge_vertex_transitive(const BipartiteGraph& g) {
  if (g.vertex_count() > kMaxAutomorphismVertices)
    fail_cap("automorphism search vertices", double(g.vertex_count()),
             double(kMaxAutomorphismVertices));
  if (!g.has_edges()) return true;
  // With no isolated vertex, edge transitivity gives transitivity on each
  // class.
  if (g.has_isolated_vertex()) return false;
  for (Side s : {Side::One, Side::Two}) {
    const std::size_t d = g.degree(s, 0);
    for (std::uint32_t i = 1; i < g.size(s); ++i)
      if (g.degree(s, i) != d) return false;
  }

  AutSearch search(g);
  const auto n1 = static_cast<std::uint32_t>(g.n1());
  const auto edges = g.edges();
  std::map<Edge, std::size_t> index;
  for (std::size_t e = 0; e < edges.size(); ++e) index[edges[e]] = e;

  std::vector<Perm> gens;
  std::vector<bool> in_orbit(edges.size(), false);
  std::vector<std::size_t> orbit{0};
  in_orbit[0] = true;
  auto close_orbit = [&] {
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const Perm& p : gens) {
        const Edge& e = edges[orbit[i]];
        const Edge img{p[e.u], p[n1 + e.v] - n1};
        const std::size_t j = index.at(img);
        if (!in_orbit[j]) {
          in_orbit[j] = true;
          orbit.push_back(j);
        }
      }
  };
  for (std::size_t e = 1; e < edges.size(); ++e) {
    if (in_orbit[e]) continue;
    auto p = search.find(edges[0].u, edges[e].u, n1 + edges[0].v, n1 + edges[e].v);
    if (!p) return false;
    gens.push_back(std::move(*p));
    close_orbit();
  }
  return true;
}

}  // namespace loglim
