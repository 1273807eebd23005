#include <algorithm>
#include <set>

#include "loglim/error.hpp"
#include "loglim/groups.hpp"

namespace loglim {

namespace {

using u128 = unsigned __int128;

BigInt to_big(u128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

// coset_id[g] = index of the left coset gT, cosets numbered by their
// smallest element.
std::vector<std::uint32_t> left_coset_ids(const Subgroup& t, std::size_t* count) {
  const FiniteGroup& g = t.group();
  std::vector<std::uint32_t> rep(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    std::uint32_t m = x;
    for (std::uint32_t s : t.elements()) m = std::min(m, g.mul(x, s));
    rep[x] = m;
  }
  std::vector<std::uint32_t> reps(rep);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  *count = reps.size();
  std::vector<std::uint32_t> id(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x)
    id[x] = static_cast<std::uint32_t>(
        std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
  return id;
}

struct Step {
  std::uint32_t edge;
  int anchor1 = -1;  // earlier edge at the class-1 endpoint
  int anchor2 = -1;  // earlier edge at the class-2 endpoint
  bool free = false;  // never used as an anchor later
};

// Orders edges so that each new edge shares as many endpoints as possible
// with edges already placed; components start with an unanchored edge.
std::vector<Step> plan_edges(const BipartiteGraph& h) {
  const std::size_t m = h.edge_count();
  std::vector<int> first1(h.n1(), -1), first2(h.n2(), -1);
  std::vector<bool> placed(m, false);
  std::vector<Step> steps;
  for (std::size_t k = 0; k < m; ++k) {
    int best = -1, best_score = -1;
    for (std::size_t e = 0; e < m; ++e) {
      if (placed[e]) continue;
      const Edge& ed = h.edges()[e];
      const int score = (first1[ed.u] >= 0) + (first2[ed.v] >= 0);
      if (score > best_score) {
        best = static_cast<int>(e);
        best_score = score;
      }
    }
    const Edge& ed = h.edges()[best];
    Step s{static_cast<std::uint32_t>(best), first1[ed.u], first2[ed.v]};
    placed[best] = true;
    if (first1[ed.u] < 0) first1[ed.u] = best;
    if (first2[ed.v] < 0) first2[ed.v] = best;
    steps.push_back(s);
  }
  std::vector<bool> anchor(m, false);
  for (const Step& s : steps) {
    if (s.anchor1 >= 0) anchor[s.anchor1] = true;
    if (s.anchor2 >= 0) anchor[s.anchor2] = true;
  }
  for (Step& s : steps) s.free = !anchor[s.edge] && (s.anchor1 >= 0 || s.anchor2 >= 0);
  return steps;
}

class WSearch {
 public:
  WSearch(const std::vector<Step>& steps, std::size_t edges, const Subgroup& t1,
          const Subgroup& t2)
      : steps_(steps), g_(t1.group()), t1_(t1), t2_(t2), value_(edges, 0) {}

  BigInt run() {
    recurse(0, 1, BigInt(1), false);
    return total_ + to_big(acc_);
  }

 private:
  // Calls fn(candidate) for each group element admissible for step s.
  template <class Fn>
  void candidates(const Step& s, Fn&& fn) const {
    if (s.anchor1 >= 0) {
      const std::uint32_t base = value_[s.anchor1];
      for (std::uint32_t t : t1_.elements()) {
        const std::uint32_t c = g_.mul(t, base);
        if (s.anchor2 >= 0 && !t2_.contains(g_.mul(c, g_.inv(value_[s.anchor2]))))
          continue;
        fn(c);
      }
    } else {
      const std::uint32_t base = value_[s.anchor2];
      for (std::uint32_t t : t2_.elements()) fn(g_.mul(t, base));
    }
  }

  void recurse(std::size_t i, u128 prod, BigInt big, bool use_big) {
    if (i == steps_.size()) {
      if (use_big) {
        total_ += big;
      } else {
        if (acc_ > (u128(1) << 126)) {
          total_ += to_big(acc_);
          acc_ = 0;
        }
        acc_ += prod;
      }
      return;
    }
    const Step& s = steps_[i];
    if (s.anchor1 < 0 && s.anchor2 < 0) {
      // Right translation by G acts freely on solutions: fix this edge to
      // the identity and multiply by |G|.
      value_[s.edge] = g_.identity();
      next(i, prod, big, use_big, g_.order());
      return;
    }
    if (s.free) {
      std::uint64_t k = 0;
      candidates(s, [&](std::uint32_t) { ++k; });
      if (k) next(i, prod, big, use_big, k);
      return;
    }
    candidates(s, [&](std::uint32_t c) {
      value_[s.edge] = c;
      recurse(i + 1, prod, big, use_big);
    });
  }

  void next(std::size_t i, u128 prod, BigInt big, bool use_big, std::uint64_t factor) {
    if (!use_big) {
      u128 r;
      if (!__builtin_mul_overflow(prod, u128(factor), &r)) {
        recurse(i + 1, r, big, false);
        return;
      }
      big = to_big(prod);
    }
    recurse(i + 1, 0, big * factor, true);
  }

  const std::vector<Step>& steps_;
  const FiniteGroup& g_;
  const Subgroup& t1_;
  const Subgroup& t2_;
  std::vector<std::uint32_t> value_;
  u128 acc_ = 0;
  BigInt total_ = 0;
};

}  // namespace

BipartiteGraph coset_graph(const Subgroup& t1, const Subgroup& t2) {
  if (t1.parent() != t2.parent())
    fail(ErrorCode::InvalidArgument, "coset_graph: subgroups of different groups");
  std::size_t n1 = 0, n2 = 0;
  const auto id1 = left_coset_ids(t1, &n1);
  const auto id2 = left_coset_ids(t2, &n2);
  std::set<Edge> edges;
  for (std::uint32_t g = 0; g < t1.group().order(); ++g) edges.insert({id1[g], id2[g]});
  return BipartiteGraph(n1, n2, {edges.begin(), edges.end()});
}

BigInt w_count(const BipartiteGraph& h, const Subgroup& t1, const Subgroup& t2,
               const WCountOptions& options) {
  if (t1.parent() != t2.parent())
    fail(ErrorCode::InvalidArgument, "w_count: subgroups of different groups");
  const std::vector<Step> steps = plan_edges(h);
  double nodes = 1, total = 1;
  const double both = double(std::min(t1.order(), t2.order()));
  for (const Step& s : steps) {
    if (s.free || (s.anchor1 < 0 && s.anchor2 < 0)) continue;
    nodes *= s.anchor1 >= 0 && s.anchor2 >= 0 ? both
             : s.anchor1 >= 0                 ? double(t1.order())
                                              : double(t2.order());
    total += nodes;
  }
  if (total > options.max_nodes) fail_cap("w_count search nodes", total, options.max_nodes);
  return WSearch(steps, h.edge_count(), t1, t2).run();
}

Rational t_via_w(const BipartiteGraph& h, const Subgroup& t1, const Subgroup& t2,
                 const WCountOptions& options) {
  if (h.has_isolated_vertex())
    fail(ErrorCode::InvalidArgument, "t_via_w needs H without isolated vertices");
  const BigInt w = w_count(h, t1, t2, options);
  const std::size_t meet = intersection(t1, t2).order();
  const unsigned n1 = static_cast<unsigned>(h.n1()), n2 = static_cast<unsigned>(h.n2());
  const BigInt num = w * pow_big(t1.order(), n1) * pow_big(t2.order(), n2);
  const BigInt den = pow_big(meet, static_cast<unsigned>(h.edge_count())) *
                     pow_big(t1.group().order(), n1 + n2);
  return Rational(num, den);
}

}  // namespace loglim
