#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "loglim/bgraph.hpp"
#include "loglim/limits.hpp"

namespace loglim {

/// G(n, beta, alpha): ceil(n^alpha) x ceil(n^(1-alpha)) vertices, each pair
/// an edge independently with probability n^(beta-1). Trial t of a run uses
/// a std::mt19937_64 seeded with splitmix64 of (seed, t).
struct RandomModelParams {
  std::uint64_t n = 2;
  QuasiParams params{Rational(1), Rational(1, 2)};
  std::uint64_t seed = 0;
  std::size_t trials = 1;
};

inline constexpr std::uint64_t kMaxSamplePairs = 200'000'000;

/// ceil(n^a); values within 1e-9 of an integer are rounded to it first.
std::uint64_t ceil_power(std::uint64_t n, double a);
std::uint64_t class_size_one(std::uint64_t n, const QuasiParams& p);
std::uint64_t class_size_two(std::uint64_t n, const QuasiParams& p);
double edge_probability(std::uint64_t n, const QuasiParams& p);

/// Seed for trial `trial` of a run with base seed `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

BipartiteGraph sample(std::uint64_t n, const QuasiParams& p, std::uint64_t rng_seed);
/// sample(n, p, trial_seed(seed, trial)).
BipartiteGraph sample_trial(const RandomModelParams& m, std::uint64_t trial);

struct TrialStats {
  /// h per trial; empty when the sample had no edge.
  std::vector<std::optional<double>> values;
  std::size_t undefined = 0;
  double median = 0, q25 = 0, q75 = 0;
  /// Median over defined trials of |h - target|.
  double median_abs_error = 0;
  double target = 0;  // R(beta, alpha, H)
};

/// Linear-interpolation quantile of sorted data, q in [0,1].
double quantile(const std::vector<double>& sorted, double q);

TrialStats empirical_h(const BipartiteGraph& h, const RandomModelParams& m,
                       const HomCountOptions& options = {});

struct ConvergenceRow {
  std::uint64_t n = 0;
  TrialStats stats;
};

std::vector<ConvergenceRow> convergence_report(const BipartiteGraph& h,
                                               const QuasiParams& p,
                                               const std::vector<std::uint64_t>& n_list,
                                               std::size_t trials, std::uint64_t seed);

}  // namespace loglim
