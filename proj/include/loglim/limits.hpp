#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "loglim/bgraph.hpp"
#include "loglim/entropy.hpp"
#include "loglim/numeric.hpp"

namespace loglim {

/// Parameters of the sparse quasi-random limit: 0 < beta <= 1, 0 < alpha < 1,
/// alpha1 = alpha and alpha2 = 1 - alpha.
class QuasiParams {
 public:
  QuasiParams(Rational beta, Rational alpha);

  const Rational& beta() const { return beta_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& alpha1() const { return alpha_; }
  Rational alpha2() const { return 1 - alpha_; }

 private:
  Rational beta_;
  Rational alpha_;
};

// ---- quasi-random functional -------------------------------------------------

inline constexpr std::size_t kMaxImageVertices = 10;
inline constexpr std::size_t kMaxSubgraphVertices = 24;

/// Quotients of h by a partition of each class, edges deduplicated, one per
/// isomorphism class. The first entry is h itself (in canonical form).
std::vector<BipartiteGraph> homomorphic_images(const BipartiteGraph& h);

/// alpha1 n1(h) + alpha2 n2(h) - (1 - beta) |E(h)|.
Rational D_value(const QuasiParams& params, const BipartiteGraph& h);

/// Minimum of D over subgraphs with at least one edge. Only the subgraphs
/// induced on a vertex subset matter: adding edges inside the same vertex
/// set lowers D and isolated vertices raise it. Needs n1 + n2 <=
/// kMaxSubgraphVertices.
Rational M_value(const QuasiParams& params, const BipartiteGraph& h);

/// min over images H' of |E(H')| + (1 - beta)^{-1} sum_i (n_i(h) - n_i(H')) alpha_i,
/// and |E(h)| when beta = 1.
Rational R_exact(const QuasiParams& params, const BipartiteGraph& h);
double R_value(const QuasiParams& params, const BipartiteGraph& h);

struct ImageOptimum {
  Rational max_d;          // max over images of D
  BipartiteGraph argmax;   // first image attaining it
};

ImageOptimum max_image_D(const QuasiParams& params, const BipartiteGraph& h);
/// Same, over images already returned by homomorphic_images(h).
ImageOptimum max_image_D(const QuasiParams& params, const BipartiteGraph& h,
                         const std::vector<BipartiteGraph>& images);
Rational R_exact(const QuasiParams& params, const BipartiteGraph& h,
                 const std::vector<BipartiteGraph>& images);

/// R on every test graph up to `cap` total vertices.
LimitProfile R_profile(const QuasiParams& params, std::size_t cap = kDefaultProfileCap);

/// g_n of the profile h -> R(params, h).
double g_n_quasi(const QuasiParams& params, std::size_t n);

// ---- sparsity exponents ------------------------------------------------------

/// log|E| / (log n1 + log n2). Needs an edge and n1 n2 >= 2.
double beta_v(const BipartiteGraph& g);
/// H(X_G) / (H(X1) + H(X2)). Needs an edge and a non-degenerate marginal.
double beta_e(const BipartiteGraph& g);

/// h(K_{2,n}) + h(K_{n,2}) - h(K_{1,n}) - h(K_{n,1}).
double g_n_from_h(const BipartiteGraph& g, std::size_t n);
/// sum over classes of log(sum_{v,w} A_{vw}^n) - log(sum_v A_{vv}^n).
double t_n_codegree(const BipartiteGraph& g, std::size_t n);
/// (log n1 + log n2 - T_n) / (log n1 + log n2 - log|E|). g must not be
/// complete.
double g_n_codegree(const BipartiteGraph& g, std::size_t n);

/// max over 1 <= n <= n_max of 1 - 1/g_n, skipping g_n <= 0. -inf when
/// every g_n is skipped.
double beta_hat(const BipartiteGraph& g, std::size_t n_max);

struct SparsityReport {
  double beta_v = 0;
  double beta_e = 0;
  std::map<std::size_t, double> g_values;
  std::map<std::size_t, double> t_values;
  double beta_hat = 0;
};

SparsityReport sparsity_report(const BipartiteGraph& g, std::size_t n_max);

// ---- type graphs -------------------------------------------------------------

inline constexpr std::size_t kDefaultTypeClassCap = 5000;
inline constexpr std::size_t kDefaultTypeEdgeCap = 5'000'000;

/// Class i holds the length-N strings over F_i whose empirical distribution
/// is the i-th marginal of nu; (s, t) is an edge when the pair string has
/// empirical distribution nu. nu must be rational with N nu integral.
BipartiteGraph type_graph(const JointDistribution& nu, std::size_t N,
                          std::size_t class_cap = kDefaultTypeClassCap,
                          std::size_t edge_cap = kDefaultTypeEdgeCap);

/// True when N nu(i,j) is an integer for every cell.
bool type_feasible(const JointDistribution& nu, std::size_t N);

struct TypeGraphRow {
  std::size_t N = 0;
  std::size_t n1 = 0, n2 = 0, edges = 0;
  double h = 0;
  double h_star = 0;
  double gap = 0;  // h - h_star
};

std::vector<TypeGraphRow> main_theorem_experiment(const JointDistribution& nu,
                                                  const BipartiteGraph& h,
                                                  const std::vector<std::size_t>& Ns,
                                                  const MaxEntOptions& options = {});

}  // namespace loglim
