#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bitset.hpp"
#include "loglim/bgraph.hpp"
#include "loglim/error.hpp"

namespace loglim {

namespace {

using detail::Bits;
using u128 = unsigned __int128;

// Unified vertex numbering of a pattern graph: class-1 vertices first.
struct Pattern {
  std::size_t n1 = 0;
  std::vector<std::vector<std::uint32_t>> adj;

  explicit Pattern(const BipartiteGraph& h) : n1(h.n1()), adj(h.vertex_count()) {
    for (const Edge& e : h.edges()) {
      adj[e.u].push_back(static_cast<std::uint32_t>(n1 + e.v));
      adj[n1 + e.v].push_back(e.u);
    }
  }
  bool in_one(std::size_t x) const { return x < n1; }
  std::size_t size() const { return adj.size(); }
};

// Adjacency rows of the target: rows[One][a] is a bitset over V2(g) and
// rows[Two][b] a bitset over V1(g).
struct Target {
  std::size_t n1, n2;
  std::size_t maxdeg1, maxdeg2;
  std::vector<Bits> rows1, rows2;

  explicit Target(const BipartiteGraph& g)
      : n1(g.n1()), n2(g.n2()), maxdeg1(g.max_degree(Side::One)),
        maxdeg2(g.max_degree(Side::Two)), rows1(g.n1(), Bits(g.n2())),
        rows2(g.n2(), Bits(g.n1())) {
    for (const Edge& e : g.edges()) {
      rows1[e.u].set(e.v);
      rows2[e.v].set(e.u);
    }
  }
  // Class size and neighbourhood rows for pattern vertex x.
  std::size_t class_size(bool one) const { return one ? n1 : n2; }
  const Bits& row_of(bool neighbor_in_one, std::size_t image) const {
    return neighbor_in_one ? rows1[image] : rows2[image];
  }
  std::size_t branching_after_neighbor(bool one) const {
    // A class-1 vertex with an assigned class-2 neighbour lies in that
    // neighbour's row, of size at most maxdeg2.
    return one ? maxdeg2 : maxdeg1;
  }
};

std::vector<std::vector<std::uint32_t>> components(const Pattern& p) {
  std::vector<int> comp(p.size(), -1);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<std::uint32_t> stack{s};
    comp[s] = static_cast<int>(out.size() - 1);
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (auto y : p.adj[x])
        if (comp[y] < 0) {
          comp[y] = comp[s];
          stack.push_back(y);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

// BFS order from a maximum-degree vertex of the component.
std::vector<std::uint32_t> bfs_order(const Pattern& p,
                                     const std::vector<std::uint32_t>& comp) {
  std::uint32_t root = comp.front();
  for (auto x : comp)
    if (p.adj[x].size() > p.adj[root].size()) root = x;
  std::vector<std::uint32_t> order{root};
  std::vector<bool> seen(p.size(), false);
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto nbrs = p.adj[order[i]];
    std::sort(nbrs.begin(), nbrs.end(), [&](auto a, auto b) {
      return p.adj[a].size() != p.adj[b].size() ? p.adj[a].size() > p.adj[b].size()
                                                : a < b;
    });
    for (auto y : nbrs)
      if (!seen[y]) {
        seen[y] = true;
        order.push_back(y);
      }
  }
  return order;
}

// Greedy vertex cover first (largest uncovered degree, preferring vertices
// next to the cover), then the remaining independent vertices.
std::vector<std::uint32_t> cover_first_order(const Pattern& p,
                                             const std::vector<std::uint32_t>& comp) {
  std::vector<bool> chosen(p.size(), false);
  std::vector<std::size_t> uncovered(p.size(), 0);
  for (auto x : comp) uncovered[x] = p.adj[x].size();
  std::vector<std::uint32_t> order;
  while (true) {
    int best = -1;
    bool best_adjacent = false;
    for (auto x : comp) {
      if (chosen[x] || uncovered[x] == 0) continue;
      bool adjacent = std::any_of(p.adj[x].begin(), p.adj[x].end(),
                                  [&](auto y) { return chosen[y]; });
      if (best < 0 || uncovered[x] > uncovered[best] ||
          (uncovered[x] == uncovered[best] && adjacent && !best_adjacent)) {
        best = static_cast<int>(x);
        best_adjacent = adjacent;
      }
    }
    if (best < 0) break;
    chosen[best] = true;
    order.push_back(static_cast<std::uint32_t>(best));
    for (auto y : p.adj[best])
      if (!chosen[y] && uncovered[y] > 0) --uncovered[y];
    uncovered[best] = 0;
  }
  for (auto x : comp)
    if (!chosen[x]) order.push_back(x);
  return order;
}

// A search plan: `order` is split into a searched prefix and a tail of
// vertices whose neighbours all lie in the prefix. Tail vertices are
// conditionally independent and contribute a product of candidate counts.
struct Plan {
  std::vector<std::uint32_t> order;
  std::size_t prefix = 0;
  double estimated_nodes = 0;
};

Plan make_plan(const Pattern& p, const Target& t, std::vector<std::uint32_t> order,
               bool allow_tail) {
  Plan plan;
  plan.order = std::move(order);
  std::vector<std::size_t> pos(p.size(), 0);
  for (std::size_t i = 0; i < plan.order.size(); ++i) pos[plan.order[i]] = i;
  plan.prefix = plan.order.size();
  if (allow_tail) {
    // A vertex can join the tail if all its neighbours come before the tail.
    while (plan.prefix > 0) {
      auto x = plan.order[plan.prefix - 1];
      bool ok = std::all_of(p.adj[x].begin(), p.adj[x].end(),
                            [&](auto y) { return pos[y] < plan.prefix - 1; });
      if (!ok || p.adj[x].empty()) break;
      --plan.prefix;
    }
  }
  double nodes = 1, total = 1;
  for (std::size_t i = 0; i < plan.prefix; ++i) {
    auto x = plan.order[i];
    bool has_prior = std::any_of(p.adj[x].begin(), p.adj[x].end(),
                                 [&](auto y) { return pos[y] < i; });
    const bool one = p.in_one(x);
    nodes *= double(has_prior ? t.branching_after_neighbor(one) : t.class_size(one));
    total += nodes;
  }
  plan.estimated_nodes = total + nodes * double(plan.order.size() - plan.prefix);
  return plan;
}

class Accumulator {
 public:
  void add(std::uint64_t v) {
    if (acc_ > kFlush) flush();
    acc_ += v;
  }
  void add(const BigInt& v) { big_ += v; }
  BigInt value() {
    flush();
    return big_;
  }

 private:
  static constexpr u128 kFlush = u128(1) << 126;
  void flush() {
    if (acc_ == 0) return;
    BigInt hi = static_cast<std::uint64_t>(acc_ >> 64);
    big_ += (hi << 64) + static_cast<std::uint64_t>(acc_);
    acc_ = 0;
  }
  u128 acc_ = 0;
  BigInt big_ = 0;
};

class Searcher {
 public:
  Searcher(const Pattern& p, const Target& t, const Plan& plan, bool injective)
      : p_(p), t_(t), plan_(plan), injective_(injective), image_(p.size(), 0),
        assigned_(p.size(), false), used1_(t.n1), used2_(t.n2),
        all1_(t.n1, true), all2_(t.n2, true) {
    for (std::size_t i = 0; i < plan.order.size(); ++i) {
      const bool one = p.in_one(plan.order[i]);
      scratch_.emplace_back(t.class_size(one));
    }
  }

  BigInt run() {
    recurse(0);
    return acc_.value();
  }

 private:
  // Candidate images of pattern vertex x given the assigned neighbours.
  void candidates(std::uint32_t x, Bits& out) const {
    const bool one = p_.in_one(x);
    out = one ? all1_ : all2_;
    for (auto y : p_.adj[x])
      if (assigned_[y]) out.and_with(t_.row_of(!one, image_[y]));
    if (injective_) out.and_not(one ? used1_ : used2_);
  }

  void recurse(std::size_t depth) {
    if (depth == plan_.prefix) {
      leaf();
      return;
    }
    const auto x = plan_.order[depth];
    Bits& cand = scratch_[depth];
    candidates(x, cand);
    const bool one = p_.in_one(x);
    assigned_[x] = true;
    cand.for_each([&](std::size_t img) {
      image_[x] = static_cast<std::uint32_t>(img);
      if (injective_) (one ? used1_ : used2_).set(img);
      recurse(depth + 1);
      if (injective_) (one ? used1_ : used2_).reset(img);
    });
    assigned_[x] = false;
  }

  void leaf() {
    std::uint64_t prod = 1;
    bool big = false;
    BigInt big_prod;
    for (std::size_t i = plan_.prefix; i < plan_.order.size(); ++i) {
      const auto x = plan_.order[i];
      const bool one = p_.in_one(x);
      std::size_t c;
      const auto& nb = p_.adj[x];
      if (nb.size() == 1) {
        c = t_.row_of(!one, image_[nb[0]]).count();
      } else {
        c = Bits::and_count(t_.row_of(!one, image_[nb[0]]),
                            t_.row_of(!one, image_[nb[1]]));
        if (nb.size() > 2) {
          Bits& tmp = scratch_[i];
          tmp.assign_and(t_.row_of(!one, image_[nb[0]]), t_.row_of(!one, image_[nb[1]]));
          for (std::size_t k = 2; k < nb.size(); ++k)
            tmp.and_with(t_.row_of(!one, image_[nb[k]]));
          c = tmp.count();
        }
      }
      if (c == 0) return;
      if (!big) {
        std::uint64_t next;
        if (__builtin_mul_overflow(prod, static_cast<std::uint64_t>(c), &next)) {
          big = true;
          big_prod = BigInt(prod) * c;
        } else {
          prod = next;
        }
      } else {
        big_prod *= c;
      }
    }
    if (big)
      acc_.add(big_prod);
    else
      acc_.add(prod);
  }

  const Pattern& p_;
  const Target& t_;
  const Plan& plan_;
  bool injective_;
  std::vector<std::uint32_t> image_;
  std::vector<bool> assigned_;
  Bits used1_, used2_;
  Bits all1_, all2_;
  std::vector<Bits> scratch_;
  Accumulator acc_;
};

BigInt count_impl(const BipartiteGraph& h, const BipartiteGraph& g,
                  const HomCountOptions& options, bool injective) {
  if (injective && (h.n1() > g.n1() || h.n2() > g.n2())) return 0;
  const Pattern p(h);
  const Target t(g);
  if (injective) {
    // Distinctness couples components, so search everything in one plan.
    std::vector<std::uint32_t> order;
    for (const auto& comp : components(p)) {
      auto part = bfs_order(p, comp);
      order.insert(order.end(), part.begin(), part.end());
    }
    Plan plan = make_plan(p, t, order, false);
    if (plan.estimated_nodes > options.max_nodes)
      fail_cap("hom_count_injective search nodes", plan.estimated_nodes, options.max_nodes);
    return Searcher(p, t, plan, true).run();
  }
  std::vector<Plan> plans;
  double total_nodes = 0;
  BigInt factor = 1;
  for (const auto& comp : components(p)) {
    if (comp.size() == 1) {  // isolated vertex: any image in its class
      factor *= t.class_size(p.in_one(comp[0]));
      continue;
    }
    Plan a = make_plan(p, t, bfs_order(p, comp), true);
    Plan b = make_plan(p, t, cover_first_order(p, comp), true);
    plans.push_back(b.estimated_nodes < a.estimated_nodes ? std::move(b) : std::move(a));
    total_nodes += plans.back().estimated_nodes;
  }
  if (total_nodes > options.max_nodes)
    fail_cap("hom_count search nodes", total_nodes, options.max_nodes);
  BigInt result = factor;
  for (const Plan& plan : plans) {
    if (result == 0) break;
    result *= Searcher(p, t, plan, false).run();
  }
  return result;
}

}  // namespace

BigInt hom_count(const BipartiteGraph& h, const BipartiteGraph& g,
                 const HomCountOptions& options) {
  return count_impl(h, g, options, false);
}

BigInt hom_count_injective(const BipartiteGraph& h, const BipartiteGraph& g,
                           const HomCountOptions& options) {
  return count_impl(h, g, options, true);
}

BigInt hom_count_complete(std::size_t a, std::size_t b, const BipartiteGraph& g) {
  if (a == 0 || b == 0)
    fail(ErrorCode::InvalidArgument, "hom_count_complete needs a,b >= 1");
  // Sum over a-tuples of one class of |common neighbourhood|^b; enumerate
  // whichever side has fewer tuples.
  const double tuples1 = std::pow(double(g.n1()), double(a));
  const double tuples2 = std::pow(double(g.n2()), double(b));
  const bool use_one = tuples1 <= tuples2;
  const std::size_t arity = use_one ? a : b;
  const auto exponent = static_cast<unsigned>(use_one ? b : a);
  const Target t(g);
  const auto& rows = use_one ? t.rows1 : t.rows2;
  const std::size_t other = use_one ? g.n2() : g.n1();

  std::vector<BigInt> powers(other + 1);
  for (std::size_t c = 0; c <= other; ++c) powers[c] = pow_big(c, exponent);

  std::vector<Bits> level(arity + 1, Bits(other, true));
  BigInt total = 0;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == arity) {
      total += powers[level[depth].count()];
      return;
    }
    for (const Bits& row : rows) {
      level[depth + 1].assign_and(level[depth], row);
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return total;
}

BigInt hom_count_path(std::size_t m, Side start, const BipartiteGraph& g) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "hom_count_path needs m >= 1");
  std::vector<BigInt> x(g.size(start), 1);
  Side side = start;
  for (std::size_t step = 0; step < m; ++step) {
    const Side next = other(side);
    std::vector<BigInt> y(g.size(next), 0);
    for (std::uint32_t w = 0; w < y.size(); ++w)
      for (auto u : g.neighbors(next, w)) y[w] += x[u];
    x = std::move(y);
    side = next;
  }
  return std::accumulate(x.begin(), x.end(), BigInt(0));
}

BigInt hom_count_even_cycle(std::size_t k, const BipartiteGraph& g) {
  if (k < 2) fail(ErrorCode::InvalidArgument, "hom_count_even_cycle needs k >= 2");
  // The codegree matrix of either class has the same trace powers.
  const Side side = g.n1() <= g.n2() ? Side::One : Side::Two;
  const std::size_t n = g.size(side);
  const Target t(g);
  const auto& rows = side == Side::One ? t.rows1 : t.rows2;
  std::vector<std::uint64_t> codeg(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) codeg[i * n + j] = Bits::and_count(rows[i], rows[j]);

  if (k == 2) {
    BigInt total = 0;
    for (auto c : codeg) total += BigInt(c) * c;
    return total;
  }
  std::vector<BigInt> power(codeg.begin(), codeg.end());
  for (std::size_t step = 2; step < k; ++step) {
    std::vector<BigInt> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (power[i * n + l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (codeg[l * n + j]) next[i * n + j] += power[i * n + l] * codeg[l * n + j];
      }
    power = std::move(next);
  }
  BigInt trace = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) trace += power[i * n + l] * codeg[l * n + i];
  return trace;
}

BigInt hom_count_auto(const BipartiteGraph& h, const BipartiteGraph& g,
                      const HomCountOptions& options) {
  if (h.is_complete()) return hom_count_complete(h.n1(), h.n2(), g);
  if (!h.has_isolated_vertex() && h.component_count() == 1 &&
      h.max_degree(Side::One) <= 2 && h.max_degree(Side::Two) <= 2) {
    if (h.edge_count() + 1 == h.vertex_count()) {
      // Path: start from a degree-1 endpoint.
      for (std::uint32_t u = 0; u < h.n1(); ++u)
        if (h.degree(Side::One, u) == 1)
          return hom_count_path(h.edge_count(), Side::One, g);
      return hom_count_path(h.edge_count(), Side::Two, g);
    }
    if (h.edge_count() == h.vertex_count() && h.n1() == h.n2())
      return hom_count_even_cycle(h.n1(), g);
  }
  return hom_count(h, g, options);
}

}  // namespace loglim
