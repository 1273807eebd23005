#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>

#include "loglim/error.hpp"
#include "loglim/limits.hpp"

namespace loglim {

namespace {

// Restricted-growth strings of length n: s[0] = 0, s[i] <= 1 + max(s[..i)).
template <class Fn>
void for_each_partition(std::size_t n, Fn&& fn) {
  std::vector<std::uint32_t> s(n, 0), top(n, 0);
  while (true) {
    fn(s, n == 0 ? 0 : top[n - 1] + 1);
    std::size_t i = n;
    while (i > 1 && s[i - 1] == top[i - 2] + 1) --i;
    if (i <= 1) return;
    ++s[i - 1];
    top[i - 1] = std::max(top[i - 2], s[i - 1]);
    for (std::size_t j = i; j < n; ++j) {
      s[j] = 0;
      top[j] = top[j - 1];
    }
  }
}

}  // namespace

QuasiParams::QuasiParams(Rational beta, Rational alpha)
    : beta_(std::move(beta)), alpha_(std::move(alpha)) {
  if (beta_ <= 0 || beta_ > 1)
    fail(ErrorCode::InvalidArgument, "beta must lie in (0, 1]");
  if (alpha_ <= 0 || alpha_ >= 1)
    fail(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");
}

std::vector<BipartiteGraph> homomorphic_images(const BipartiteGraph& h) {
  if (h.vertex_count() > kMaxImageVertices)
    fail_cap("homomorphic_images vertices", double(h.vertex_count()),
             double(kMaxImageVertices));
  std::vector<BipartiteGraph> out{canonical_form(h)};
  std::set<CanonicalKey> seen{canonical_key(h)};
  std::vector<std::vector<std::uint32_t>> parts2;
  std::vector<std::size_t> blocks2;
  for_each_partition(h.n2(), [&](const auto& s, std::size_t k) {
    parts2.push_back(s);
    blocks2.push_back(k);
  });
  for_each_partition(h.n1(), [&](const auto& s1, std::size_t k1) {
    for (std::size_t p = 0; p < parts2.size(); ++p) {
      const auto& s2 = parts2[p];
      std::set<Edge> edges;
      for (const Edge& e : h.edges()) edges.insert({s1[e.u], s2[e.v]});
      BipartiteGraph q(k1, blocks2[p], {edges.begin(), edges.end()});
      if (seen.insert(canonical_key(q)).second) out.push_back(canonical_form(q));
    }
  });
  return out;
}

Rational D_value(const QuasiParams& params, const BipartiteGraph& h) {
  return params.alpha1() * h.n1() + params.alpha2() * h.n2() -
         (1 - params.beta()) * h.edge_count();
}

Rational M_value(const QuasiParams& params, const BipartiteGraph& h) {
  if (!h.has_edges()) fail(ErrorCode::InvalidArgument, "M_value needs an edge");
  const std::size_t n = h.vertex_count();
  if (n > kMaxSubgraphVertices)
    fail_cap("M_value vertices", double(n), double(kMaxSubgraphVertices));
  // Only (|A|, |B|, e(A,B)) matters, so collect the distinct triples first.
  std::set<std::array<std::size_t, 3>> shapes;
  const std::uint64_t full1 = (std::uint64_t{1} << h.n1()) - 1;
  for (std::uint64_t a = 1; a <= full1; ++a)
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << h.n2()); ++b) {
      std::size_t e = 0;
      for (const Edge& ed : h.edges()) e += ((a >> ed.u) & 1) && ((b >> ed.v) & 1);
      if (e > 0)
        shapes.insert({std::size_t(std::popcount(a)), std::size_t(std::popcount(b)), e});
    }
  Rational best;
  bool first = true;
  for (const auto& [x, y, e] : shapes) {
    Rational d = params.alpha1() * x + params.alpha2() * y - (1 - params.beta()) * e;
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

Rational R_exact(const QuasiParams& params, const BipartiteGraph& h,
                 const std::vector<BipartiteGraph>& images) {
  if (!h.has_edges()) fail(ErrorCode::InvalidArgument, "R needs an edge");
  if (params.beta() == 1) return Rational(h.edge_count());
  const Rational scale = 1 / (1 - params.beta());
  Rational best = h.edge_count();
  for (const BipartiteGraph& q : images) {
    const Rational v = Rational(q.edge_count()) +
                       scale * (params.alpha1() * (h.n1() - q.n1()) +
                                params.alpha2() * (h.n2() - q.n2()));
    if (v < best) best = v;
  }
  return best;
}

Rational R_exact(const QuasiParams& params, const BipartiteGraph& h) {
  if (params.beta() == 1) {
    if (!h.has_edges()) fail(ErrorCode::InvalidArgument, "R needs an edge");
    return Rational(h.edge_count());
  }
  return R_exact(params, h, homomorphic_images(h));
}

double R_value(const QuasiParams& params, const BipartiteGraph& h) {
  return to_double(R_exact(params, h));
}

ImageOptimum max_image_D(const QuasiParams& params, const BipartiteGraph&,
                         const std::vector<BipartiteGraph>& images) {
  if (images.empty()) fail(ErrorCode::InvalidArgument, "max_image_D: no images");
  std::size_t arg = 0;
  Rational best = D_value(params, images[0]);
  for (std::size_t i = 1; i < images.size(); ++i) {
    Rational d = D_value(params, images[i]);
    if (d > best) {
      best = d;
      arg = i;
    }
  }
  return {best, images[arg]};
}

ImageOptimum max_image_D(const QuasiParams& params, const BipartiteGraph& h) {
  return max_image_D(params, h, homomorphic_images(h));
}

LimitProfile R_profile(const QuasiParams& params, std::size_t cap) {
  LimitProfile profile;
  profile.cap = cap;
  for (const TestGraph& t : enumerate_test_graphs(cap))
    profile.entries.emplace(t.key, R_value(params, t.graph));
  return profile;
}

double g_n_quasi(const QuasiParams& params, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "g_n needs n >= 1");
  return R_value(params, complete(2, n)) + R_value(params, complete(n, 2)) -
         R_value(params, complete(1, n)) - R_value(params, complete(n, 1));
}

}  // namespace loglim
