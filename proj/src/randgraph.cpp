#include <algorithm>
#include <cmath>
#include <random>

#include "loglim/error.hpp"
#include "loglim/randgraph.hpp"

namespace loglim {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::uint64_t ceil_power(std::uint64_t n, double a) {
  const double v = std::pow(double(n), a);
  const double r = std::round(v);
  if (std::abs(v - r) <= 1e-9) return static_cast<std::uint64_t>(r);
  return static_cast<std::uint64_t>(std::ceil(v));
}

std::uint64_t class_size_one(std::uint64_t n, const QuasiParams& p) {
  return ceil_power(n, to_double(p.alpha1()));
}

std::uint64_t class_size_two(std::uint64_t n, const QuasiParams& p) {
  return ceil_power(n, to_double(p.alpha2()));
}

double edge_probability(std::uint64_t n, const QuasiParams& p) {
  if (p.beta() == 1) return 1.0;
  return std::pow(double(n), to_double(p.beta()) - 1.0);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ trial);
}

BipartiteGraph sample(std::uint64_t n, const QuasiParams& p, std::uint64_t rng_seed) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "random model needs n >= 2");
  const std::uint64_t n1 = class_size_one(n, p), n2 = class_size_two(n, p);
  const double pairs = double(n1) * double(n2);
  if (pairs > double(kMaxSamplePairs))
    fail_cap("random model vertex pairs", pairs, double(kMaxSamplePairs));
  const double q = edge_probability(n, p);
  std::mt19937_64 rng(rng_seed);
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < n1; ++u)
    for (std::uint32_t v = 0; v < n2; ++v)
      if (q >= 1.0 || uniform01(rng) < q) edges.push_back({u, v});
  return BipartiteGraph(n1, n2, std::move(edges));
}

BipartiteGraph sample_trial(const RandomModelParams& m, std::uint64_t trial) {
  return sample(m.n, m.params, trial_seed(m.seed, trial));
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::nan("");
  const double pos = q * double(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - double(lo)) * (sorted[hi] - sorted[lo]);
}

TrialStats empirical_h(const BipartiteGraph& h, const RandomModelParams& m,
                       const HomCountOptions& options) {
  if (m.trials == 0) fail(ErrorCode::InvalidArgument, "empirical_h needs trials >= 1");
  if (!h.has_edges()) fail(ErrorCode::InvalidArgument, "empirical_h needs H with an edge");
  TrialStats st;
  st.target = R_value(m.params, h);
  std::vector<double> defined, errors;
  for (std::size_t t = 0; t < m.trials; ++t) {
    const BipartiteGraph g = sample_trial(m, t);
    if (!g.has_edges()) {
      st.values.emplace_back();
      ++st.undefined;
      continue;
    }
    const double v = h_density(h, g, options);
    st.values.emplace_back(v);
    defined.push_back(v);
    errors.push_back(std::abs(v - st.target));
  }
  std::sort(defined.begin(), defined.end());
  std::sort(errors.begin(), errors.end());
  st.median = quantile(defined, 0.5);
  st.q25 = quantile(defined, 0.25);
  st.q75 = quantile(defined, 0.75);
  st.median_abs_error = quantile(errors, 0.5);
  return st;
}

std::vector<ConvergenceRow> convergence_report(const BipartiteGraph& h,
                                               const QuasiParams& p,
                                               const std::vector<std::uint64_t>& n_list,
                                               std::size_t trials, std::uint64_t seed) {
  std::vector<ConvergenceRow> rows;
  for (std::uint64_t n : n_list) {
    RandomModelParams m{n, p, seed, trials};
    rows.push_back({n, empirical_h(h, m)});
  }
  return rows;
}

}  // namespace loglim
