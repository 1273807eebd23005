#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "loglim/numeric.hpp"

namespace loglim {

/// Vertex class label. Homomorphisms, automorphisms and gluing all preserve it.
enum class Side : std::uint8_t { One = 1, Two = 2 };

inline Side other(Side s) { return s == Side::One ? Side::Two : Side::One; }

/// An edge joins class-1 vertex `u` with class-2 vertex `v`.
struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Checks the bipartite graph invariants: n1, n2 >= 1, all endpoints in
/// range, no repeated edge. Throws Error(IndexOutOfRange | DuplicateEdge |
/// InvalidArgument).
void validate(std::size_t n1, std::size_t n2, std::span<const Edge> edges);

/// Graph with two labelled vertex classes. Immutable once constructed; the
/// edge list is kept sorted lexicographically.
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t n1, std::size_t n2, std::vector<Edge> edges);

  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  std::size_t size(Side s) const { return s == Side::One ? n1_ : n2_; }
  std::size_t vertex_count() const { return n1_ + n2_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  /// Neighbours of vertex `i` of class `s`, sorted ascending.
  std::span<const std::uint32_t> neighbors(Side s, std::uint32_t i) const;
  std::size_t degree(Side s, std::uint32_t i) const {
    return neighbors(s, i).size();
  }
  std::size_t max_degree(Side s) const;

  bool has_edge(std::uint32_t u, std::uint32_t v) const;

  /// Membership in B0: at least one edge.
  bool has_edges() const { return !edges_.empty(); }
  bool is_complete() const { return edges_.size() == n1_ * n2_; }
  bool has_isolated_vertex() const;
  std::size_t component_count() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n1_;
  std::size_t n2_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> adj1_;
  std::vector<std::vector<std::uint32_t>> adj2_;
};

// ---- generators -----------------------------------------------------------

BipartiteGraph single_edge();                          // P1
BipartiteGraph complete(std::size_t a, std::size_t b);  // K_{a,b}
/// Cycle on `length` vertices; `length` must be even and >= 4.
BipartiteGraph even_cycle(std::size_t length);
/// Path with m edges whose first vertex lies in class `start`.
BipartiteGraph path(std::size_t m, Side start = Side::One);
BipartiteGraph matching(std::size_t m);
inline BipartiteGraph star_center_one(std::size_t n) { return complete(1, n); }
inline BipartiteGraph star_center_two(std::size_t n) { return complete(n, 1); }

// ---- constructions --------------------------------------------------------

/// Default vertex limit for constructions that multiply class sizes.
inline constexpr std::size_t kDefaultVertexCap = std::size_t{1} << 22;

/// Replaces every class-1 vertex by m copies, every class-2 vertex by n copies
/// and every edge by K_{m,n}.
BipartiteGraph blow_up(const BipartiteGraph& g, std::size_t m, std::size_t n,
                       std::size_t vertex_cap = kDefaultVertexCap);

BipartiteGraph tensor_product(const BipartiteGraph& g1,
                              const BipartiteGraph& g2,
                              std::size_t vertex_cap = kDefaultVertexCap);

BipartiteGraph disjoint_union(const BipartiteGraph& h1,
                              const BipartiteGraph& h2);

/// Identifies vertex v1 of h1 with vertex v2 of h2, both in class `side`.
BipartiteGraph glue_vertex(const BipartiteGraph& h1, const BipartiteGraph& h2,
                           Side side, std::uint32_t v1, std::uint32_t v2);

/// Identifies edge e1 of h1 with edge e2 of h2 (endpoint by endpoint); the
/// two copies of the edge become one.
BipartiteGraph glue_edge(const BipartiteGraph& h1, const BipartiteGraph& h2,
                         std::size_t e1, std::size_t e2);

/// Bipartite representation of an ordinary graph on n vertices: both classes
/// are copies of V and each undirected edge {v,w} gives (v,w) and (w,v).
BipartiteGraph symmetrize(
    std::size_t n,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> undirected);
BipartiteGraph symmetrize(const std::vector<std::vector<int>>& adjacency);

/// Subgraph on the same vertex set keeping the edges whose index is set.
BipartiteGraph edge_subgraph(const BipartiteGraph& g,
                             const std::vector<bool>& keep);

/// Removes isolated vertices, renumbering the survivors in order.
BipartiteGraph drop_isolated(const BipartiteGraph& g);

// ---- canonical form -------------------------------------------------------

/// Isomorphism invariant for label-preserving isomorphism: the row-major
/// biadjacency bitmap that is lexicographically smallest over all
/// permutations of each class, prefixed by (n1, n2).
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Largest class size the canonicaliser accepts on its smaller side.
inline constexpr std::size_t kCanonicalMaxPermuted = 9;

CanonicalKey canonical_key(const BipartiteGraph& g);

/// Graph rebuilt from the canonical bitmap (a fixed representative of the
/// isomorphism class).
BipartiteGraph canonical_form(const BipartiteGraph& g);

struct TestGraph {
  CanonicalKey key;
  BipartiteGraph graph;
};

inline constexpr std::size_t kDefaultProfileCap = 5;
inline constexpr std::size_t kMaxEnumerationCap = 9;

/// One representative per isomorphism class with at least one edge, no
/// isolated vertex and n1 + n2 <= cap. Ordered by vertex count, then key.
std::vector<TestGraph> enumerate_test_graphs(std::size_t cap);

// ---- homomorphism counting -------------------------------------------------

struct HomCountOptions {
  /// Refuse when the estimated number of search nodes exceeds this.
  double max_nodes = 1e10;
};

/// Exact number of label-preserving homomorphisms h -> g, by backtracking.
BigInt hom_count(const BipartiteGraph& h, const BipartiteGraph& g,
                 const HomCountOptions& options = {});

/// Exact number of injective label-preserving homomorphisms h -> g.
BigInt hom_count_injective(const BipartiteGraph& h, const BipartiteGraph& g,
                           const HomCountOptions& options = {});

/// Closed forms. K_{a,b}: codegree power sums over a-tuples of class 1.
BigInt hom_count_complete(std::size_t a, std::size_t b,
                          const BipartiteGraph& g);
/// Path with m edges starting in class `start`: walk counts.
BigInt hom_count_path(std::size_t m, Side start, const BipartiteGraph& g);
/// Cycle on 2k vertices: trace of the k-th power of the codegree matrix.
BigInt hom_count_even_cycle(std::size_t k, const BipartiteGraph& g);

/// Uses a closed form when h is complete bipartite, a path or an even cycle,
/// and the generic counter otherwise.
BigInt hom_count_auto(const BipartiteGraph& h, const BipartiteGraph& g,
                      const HomCountOptions& options = {});

// ---- densities ---------------------------------------------------------------

/// t(h,g) = hom / (n1(g)^n1(h) n2(g)^n2(h)), exactly.
Rational t_exact(const BipartiteGraph& h, const BipartiteGraph& g,
                 const HomCountOptions& options = {});
double t_density(const BipartiteGraph& h, const BipartiteGraph& g,
                 const HomCountOptions& options = {});
/// d = -ln t, from log-counts. +inf when there is no homomorphism.
double d_density(const BipartiteGraph& h, const BipartiteGraph& g,
                 const HomCountOptions& options = {});
/// h = d(h,g) / d(P1,g); equals |E(h)| when g is complete bipartite. Both
/// graphs need at least one edge.
double h_density(const BipartiteGraph& h, const BipartiteGraph& g,
                 const HomCountOptions& options = {});

/// d(h,g) computed from a known homomorphism count.
double d_from_count(const BipartiteGraph& h, const BipartiteGraph& g,
                    const BigInt& hom);
double h_from_count(const BipartiteGraph& h, const BipartiteGraph& g,
                    const BigInt& hom);

// ---- limit profiles -----------------------------------------------------------

/// Truncated vector (h(H,G))_H over the canonical test graphs up to `cap`
/// total vertices.
struct LimitProfile {
  std::size_t cap = 0;
  std::map<CanonicalKey, double> entries;
};

LimitProfile tau_profile(const BipartiteGraph& g,
                         std::size_t cap = kDefaultProfileCap);

/// Weighted L1 distance sum_H |a(H) - b(H)| 2^{-|V(H)|^2} over the keys the
/// profiles share. Throws if the key sets differ.
double kappa(const LimitProfile& a, const LimitProfile& b);
double kappa(const BipartiteGraph& g1, const BipartiteGraph& g2,
             std::size_t cap = kDefaultProfileCap);

/// Weight 2^{-(n1+n2)^2} of a key.
double kappa_weight(const CanonicalKey& key);

}  // namespace loglim
