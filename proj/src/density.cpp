#include <cmath>
#include <limits>

#include "loglim/bgraph.hpp"
#include "loglim/error.hpp"

namespace loglim {

namespace {

BigInt map_count(const BipartiteGraph& h, const BipartiteGraph& g) {
  return pow_big(g.n1(), static_cast<unsigned>(h.n1())) *
         pow_big(g.n2(), static_cast<unsigned>(h.n2()));
}

void require_b0(const BipartiteGraph& h, const BipartiteGraph& g) {
  if (!h.has_edges() || !g.has_edges())
    fail(ErrorCode::InvalidArgument,
         "h_density is undefined unless both graphs have an edge");
}

}  // namespace

Rational t_exact(const BipartiteGraph& h, const BipartiteGraph& g,
                 const HomCountOptions& options) {
  return Rational(hom_count_auto(h, g, options), map_count(h, g));
}

double d_from_count(const BipartiteGraph& h, const BipartiteGraph& g,
                    const BigInt& hom) {
  if (hom == 0) return std::numeric_limits<double>::infinity();
  if (hom == map_count(h, g)) return 0.0;
  const double log_maps = double(h.n1()) * std::log(double(g.n1())) +
                          double(h.n2()) * std::log(double(g.n2()));
  return log_maps - log_big(hom);
}

double h_from_count(const BipartiteGraph& h, const BipartiteGraph& g,
                    const BigInt& hom) {
  require_b0(h, g);
  if (g.is_complete()) return double(h.edge_count());
  const BigInt edges(g.edge_count());
  return d_from_count(h, g, hom) / d_from_count(single_edge(), g, edges);
}

double t_density(const BipartiteGraph& h, const BipartiteGraph& g,
                 const HomCountOptions& options) {
  const BigInt hom = hom_count_auto(h, g, options);
  if (hom == 0) return 0.0;
  return std::exp(-d_from_count(h, g, hom));
}

double d_density(const BipartiteGraph& h, const BipartiteGraph& g,
                 const HomCountOptions& options) {
  return d_from_count(h, g, hom_count_auto(h, g, options));
}

double h_density(const BipartiteGraph& h, const BipartiteGraph& g,
                 const HomCountOptions& options) {
  require_b0(h, g);
  if (g.is_complete()) return double(h.edge_count());
  return h_from_count(h, g, hom_count_auto(h, g, options));
}

LimitProfile tau_profile(const BipartiteGraph& g, std::size_t cap) {
  if (!g.has_edges())
    fail(ErrorCode::InvalidArgument, "tau_profile needs a graph with an edge");
  LimitProfile profile;
  profile.cap = cap;
  for (const TestGraph& t : enumerate_test_graphs(cap))
    profile.entries.emplace(t.key, h_density(t.graph, g));
  return profile;
}

double kappa(const LimitProfile& a, const LimitProfile& b) {
  if (a.entries.size() != b.entries.size())
    fail(ErrorCode::InvalidArgument, "kappa: profiles have different test sets");
  double sum = 0;
  auto ib = b.entries.begin();
  for (const auto& [key, value] : a.entries) {
    if (ib->first != key)
      fail(ErrorCode::InvalidArgument, "kappa: profiles have different test sets");
    sum += std::abs(value - ib->second) * kappa_weight(key);
    ++ib;
  }
  return sum;
}

double kappa(const BipartiteGraph& g1, const BipartiteGraph& g2, std::size_t cap) {
  return kappa(tau_profile(g1, cap), tau_profile(g2, cap));
}

}  // namespace loglim
