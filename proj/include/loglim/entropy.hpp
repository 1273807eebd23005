#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "loglim/bgraph.hpp"
#include "loglim/numeric.hpp"

namespace loglim {

/// Probability table p(i,j) on F1 x F2 describing a pair X = (X1, X2).
/// Stored row-major in double precision; distributions built from rationals
/// keep the exact table as well.
class JointDistribution {
 public:
  /// Entries must be >= 0 and sum to 1 within 1e-12.
  JointDistribution(std::size_t k1, std::size_t k2, std::vector<double> p);
  /// Entries must be >= 0 and sum to exactly 1.
  static JointDistribution from_rational(std::size_t k1, std::size_t k2,
                                         std::vector<Rational> p);

  std::size_t k1() const { return k1_; }
  std::size_t k2() const { return k2_; }
  double at(std::size_t i, std::size_t j) const { return p_[i * k2_ + j]; }
  std::span<const double> table() const { return p_; }

  bool is_rational() const { return exact_.has_value(); }
  const Rational& exact(std::size_t i, std::size_t j) const;

  std::vector<double> marginal1() const;
  std::vector<double> marginal2() const;
  std::vector<Rational> exact_marginal1() const;
  std::vector<Rational> exact_marginal2() const;

  friend bool operator==(const JointDistribution& a, const JointDistribution& b) {
    return a.k1_ == b.k1_ && a.k2_ == b.k2_ && a.p_ == b.p_ && a.exact_ == b.exact_;
  }

 private:
  JointDistribution() = default;

  std::size_t k1_ = 0;
  std::size_t k2_ = 0;
  std::vector<double> p_;
  std::optional<std::vector<Rational>> exact_;
};

/// Shannon entropy in nats with 0 ln 0 = 0.
double entropy(std::span<const double> p);
double joint_entropy(const JointDistribution& x);
double entropy1(const JointDistribution& x);
double entropy2(const JointDistribution& x);
/// I(X1;X2) = H(X1) + H(X2) - H(X).
double mutual_information(const JointDistribution& x);

/// Uniform random edge of g; exact rationals 1/|E|.
JointDistribution from_graph(const BipartiteGraph& g);
/// ((X1,Y1),(X2,Y2)) with X and Y independent; index (a,b) -> a*|F(Y)| + b.
JointDistribution product(const JointDistribution& x, const JointDistribution& y);
JointDistribution point_mass();
/// Uniform on the diagonal of k x k.
JointDistribution uniform_diagonal(std::size_t k);
/// Independent uniform marginals on k1 x k2.
JointDistribution uniform_product(std::size_t k1, std::size_t k2);

/// Mutual information at or below this is treated as independence, where
/// h* falls back to |E(H)|.
inline constexpr double kIndependenceTol = 1e-13;

inline constexpr std::uint64_t kDefaultCellCap = 20'000'000;

/// Cell cap used when none is given: LOGLIM_CAP_CELLS if set, otherwise
/// kDefaultCellCap.
std::uint64_t default_cell_cap();

struct MaxEntOptions {
  double tol = 1e-10;
  std::size_t max_sweeps = 10'000;
  std::uint64_t cell_cap = 0;  // 0 = default_cell_cap()
  /// Order in which edges are fitted within a sweep; empty = edge order of H.
  std::vector<std::size_t> edge_order;
};

/// Entropy maximiser over distributions on F1^{V1(H)} x F2^{V2(H)} whose
/// marginal on every edge of H equals X.
struct MaxEntSolution {
  BipartiteGraph h_graph;
  std::size_t k1 = 0, k2 = 0;
  /// Flat table; vertex x (class-1 vertices first, then class 2) has stride
  /// strides[x].
  std::vector<double> table{};
  std::vector<std::uint64_t> strides{};
  double m_value = 0;
  double d_star = 0;
  double t_star = 1;
  double h_star = 0;
  double residual = 0;  // max over edges of the TV gap to X
  std::size_t iterations = 0;
  bool converged = false;
  /// Per-edge factor tables (k1 x k2, row-major) whose normalised product is
  /// the solution.
  std::vector<std::vector<double>> edge_factors{};

  /// Joint value of (X_u, X_v) for edge index e, as a k1 x k2 table.
  std::vector<double> edge_marginal(std::size_t e) const;
  /// Total-variation distance between `table` and the normalised product of
  /// the edge factors.
  double gibbs_reconstruction_error() const;
};

/// Cyclic iterative proportional fitting started from the normalised product
/// over edges of the support indicator of X. Throws Error(CapExceeded) when
/// the state space is too large and Error(InvalidArgument) when H has an
/// isolated vertex or no edge. Non-convergence is reported through
/// `converged == false`, not by throwing.
MaxEntSolution maxent(const BipartiteGraph& h, const JointDistribution& x,
                      const MaxEntOptions& options = {});

double d_star(const BipartiteGraph& h, const JointDistribution& x,
              const MaxEntOptions& options = {});
double t_star(const BipartiteGraph& h, const JointDistribution& x,
              const MaxEntOptions& options = {});
double h_star(const BipartiteGraph& h, const JointDistribution& x,
              const MaxEntOptions& options = {});

/// m(H,X) against |E(H)| H(X) - sum_v (deg v - 1) H(X_side(v)).
struct SidorenkoCheck {
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

SidorenkoCheck sidorenko_entropy_check(const BipartiteGraph& h,
                                       const JointDistribution& x,
                                       const MaxEntOptions& options = {});

}  // namespace loglim
