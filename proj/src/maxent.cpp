#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "loglim/entropy.hpp"
#include "loglim/error.hpp"

namespace loglim {

namespace {

// The table is row-major over the vertices of H, class-1 vertices first.
// For an edge (u, v) the flat index splits as
//   outer | x_u | mid | x_v | inner
// and the innermost block is contiguous.
struct EdgeView {
  std::uint64_t outer, stride_u, mid, stride_v, inner;
};

struct Layout {
  std::size_t k1, k2;
  std::uint64_t cells;
  std::vector<std::uint64_t> strides;
  std::vector<EdgeView> views;
};

Layout make_layout(const BipartiteGraph& h, std::size_t k1, std::size_t k2,
                   std::uint64_t cap) {
  const std::size_t n = h.vertex_count();
  std::vector<std::size_t> dim(n);
  for (std::size_t x = 0; x < n; ++x) dim[x] = x < h.n1() ? k1 : k2;
  const double est = std::pow(double(k1), double(h.n1())) *
                     std::pow(double(k2), double(h.n2()));
  if (est > double(cap)) fail_cap("maxent state-space cells", est, double(cap));

  Layout l{k1, k2, 1, std::vector<std::uint64_t>(n), {}};
  for (std::size_t x = n; x-- > 0;) {
    l.strides[x] = l.cells;
    l.cells *= dim[x];
  }
  for (const Edge& e : h.edges()) {
    const std::size_t a = e.u, b = h.n1() + e.v;
    EdgeView v;
    v.stride_u = l.strides[a];
    v.outer = l.cells / (l.strides[a] * k1);
    v.stride_v = l.strides[b];
    v.mid = l.strides[a] / (l.strides[b] * k2);
    v.inner = l.strides[b];
    l.views.push_back(v);
  }
  return l;
}

// Calls fn(first, last, pair) for each contiguous block of cells whose
// (x_u, x_v) equals pair = x_u * k2 + x_v.
template <class Fn>
void for_each_block(const Layout& l, const EdgeView& v, Fn&& fn) {
  for (std::uint64_t o = 0; o < v.outer; ++o)
    for (std::size_t i = 0; i < l.k1; ++i)
      for (std::uint64_t m = 0; m < v.mid; ++m)
        for (std::size_t j = 0; j < l.k2; ++j) {
          const std::uint64_t base = o * v.stride_u * l.k1 + i * v.stride_u +
                                     m * v.stride_v * l.k2 + j * v.stride_v;
          fn(base, base + v.inner, i * l.k2 + j);
        }
}

std::vector<double> marginal(const Layout& l, const EdgeView& v,
                             const std::vector<double>& table) {
  std::vector<double> out(l.k1 * l.k2, 0.0);
  for_each_block(l, v, [&](std::uint64_t a, std::uint64_t b, std::size_t pair) {
    double s = 0;
    for (std::uint64_t c = a; c < b; ++c) s += table[c];
    out[pair] += s;
  });
  return out;
}

double tv(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return 0.5 * s;
}

std::vector<double> gibbs_table(const Layout& l,
                                const std::vector<std::vector<double>>& factors) {
  std::vector<double> t(l.cells, 1.0);
  for (std::size_t e = 0; e < l.views.size(); ++e)
    for_each_block(l, l.views[e],
                   [&](std::uint64_t a, std::uint64_t b, std::size_t pair) {
                     const double f = factors[e][pair];
                     for (std::uint64_t c = a; c < b; ++c) t[c] *= f;
                   });
  const double total = std::accumulate(t.begin(), t.end(), 0.0);
  if (total > 0)
    for (double& v : t) v /= total;
  return t;
}

Layout layout_of(const MaxEntSolution& s) {
  return make_layout(s.h_graph, s.k1, s.k2, ~std::uint64_t{0});
}

std::vector<std::size_t> sweep_order(const BipartiteGraph& h,
                                     const MaxEntOptions& options) {
  std::vector<std::size_t> order(h.edge_count());
  std::iota(order.begin(), order.end(), 0);
  if (options.edge_order.empty()) return order;
  std::vector<std::size_t> sorted = options.edge_order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != order)
    fail(ErrorCode::InvalidArgument, "edge_order must be a permutation of the edges");
  return options.edge_order;
}

}  // namespace

std::vector<double> MaxEntSolution::edge_marginal(std::size_t e) const {
  const Layout l = layout_of(*this);
  return marginal(l, l.views.at(e), table);
}

double MaxEntSolution::gibbs_reconstruction_error() const {
  const Layout l = layout_of(*this);
  return tv(gibbs_table(l, edge_factors), table);
}

MaxEntSolution maxent(const BipartiteGraph& h, const JointDistribution& x,
                      const MaxEntOptions& options) {
  if (!h.has_edges()) fail(ErrorCode::InvalidArgument, "maxent needs H with an edge");
  if (h.has_isolated_vertex())
    fail(ErrorCode::InvalidArgument, "maxent needs H without isolated vertices");
  const std::uint64_t cap = options.cell_cap ? options.cell_cap : default_cell_cap();
  const Layout l = make_layout(h, x.k1(), x.k2(), cap);
  const std::vector<std::size_t> order = sweep_order(h, options);
  const std::span<const double> nu = x.table();
  const std::size_t m = h.edge_count();

  MaxEntSolution sol{.h_graph = h, .k1 = x.k1(), .k2 = x.k2(), .strides = l.strides};
  sol.edge_factors.assign(m, std::vector<double>(nu.size()));
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t p = 0; p < nu.size(); ++p) sol.edge_factors[e][p] = nu[p] > 0;
  sol.table = gibbs_table(l, sol.edge_factors);

  auto residual = [&] {
    double r = 0;
    for (const EdgeView& v : l.views) r = std::max(r, tv(marginal(l, v, sol.table), nu));
    return r;
  };

  sol.residual = residual();
  while (sol.residual > options.tol && sol.iterations < options.max_sweeps) {
    double sweep_gap = 0;
    for (std::size_t e : order) {
      const EdgeView& v = l.views[e];
      const std::vector<double> cur = marginal(l, v, sol.table);
      sweep_gap = std::max(sweep_gap, tv(cur, nu));
      std::vector<double> ratio(nu.size(), 0.0);
      for (std::size_t p = 0; p < nu.size(); ++p)
        if (cur[p] > 0) ratio[p] = nu[p] / cur[p];
      for_each_block(l, v, [&](std::uint64_t a, std::uint64_t b, std::size_t pair) {
        const double r = ratio[pair];
        for (std::uint64_t c = a; c < b; ++c) sol.table[c] *= r;
      });
      std::vector<double>& f = sol.edge_factors[e];
      for (std::size_t p = 0; p < nu.size(); ++p) f[p] *= ratio[p];
      const double top = *std::max_element(f.begin(), f.end());
      if (top > 0)
        for (double& w : f) w /= top;
    }
    ++sol.iterations;
    // Renormalise against drift; each fit already restores total mass.
    const double total = std::accumulate(sol.table.begin(), sol.table.end(), 0.0);
    for (double& w : sol.table) w /= total;
    sol.residual = sweep_gap <= options.tol ? residual() : sweep_gap;
  }
  if (sol.residual > options.tol) sol.residual = residual();
  sol.converged = sol.residual <= options.tol;

  sol.m_value = entropy(sol.table);
  const double h1 = entropy1(x), h2 = entropy2(x);
  sol.d_star = std::max(0.0, -sol.m_value + double(h.n1()) * h1 + double(h.n2()) * h2);
  sol.t_star = std::exp(-sol.d_star);
  const double info = mutual_information(x);
  sol.h_star = info <= kIndependenceTol ? double(m) : sol.d_star / info;
  return sol;
}

}  // namespace loglim
