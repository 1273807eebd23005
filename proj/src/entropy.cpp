#include <cmath>
#include <cstdlib>
#include <string>

#include "loglim/entropy.hpp"
#include "loglim/error.hpp"

namespace loglim {

namespace {

constexpr double kFloatSumTol = 1e-12;

void check_shape(std::size_t k1, std::size_t k2, std::size_t size) {
  if (k1 == 0 || k2 == 0)
    fail(ErrorCode::InvalidArgument, "distribution needs k1, k2 >= 1");
  if (size != k1 * k2)
    fail(ErrorCode::InvalidArgument,
         "distribution table has " + std::to_string(size) + " entries, expected " +
             std::to_string(k1 * k2));
}

}  // namespace

JointDistribution::JointDistribution(std::size_t k1, std::size_t k2,
                                     std::vector<double> p)
    : k1_(k1), k2_(k2), p_(std::move(p)) {
  check_shape(k1_, k2_, p_.size());
  double total = 0;
  for (double v : p_) {
    if (!std::isfinite(v) || v < 0)
      fail(ErrorCode::InvalidArgument, "distribution entries must be finite and >= 0");
    total += v;
  }
  if (std::abs(total - 1.0) > kFloatSumTol)
    fail(ErrorCode::InvalidArgument,
         "distribution entries sum to " + std::to_string(total) + ", not 1");
}

JointDistribution JointDistribution::from_rational(std::size_t k1, std::size_t k2,
                                                   std::vector<Rational> p) {
  check_shape(k1, k2, p.size());
  Rational total = 0;
  for (const Rational& v : p) {
    if (v < 0) fail(ErrorCode::InvalidArgument, "distribution entries must be >= 0");
    total += v;
  }
  if (total != 1)
    fail(ErrorCode::InvalidArgument,
         "rational distribution sums to " + to_string(total) + ", not 1");
  JointDistribution out;
  out.k1_ = k1;
  out.k2_ = k2;
  out.p_.reserve(p.size());
  for (const Rational& v : p) out.p_.push_back(to_double(v));
  out.exact_ = std::move(p);
  return out;
}

const Rational& JointDistribution::exact(std::size_t i, std::size_t j) const {
  if (!exact_) fail(ErrorCode::InvalidArgument, "distribution has no exact table");
  return exact_->at(i * k2_ + j);
}

std::vector<double> JointDistribution::marginal1() const {
  std::vector<double> m(k1_, 0.0);
  for (std::size_t i = 0; i < k1_; ++i)
    for (std::size_t j = 0; j < k2_; ++j) m[i] += at(i, j);
  return m;
}

std::vector<double> JointDistribution::marginal2() const {
  std::vector<double> m(k2_, 0.0);
  for (std::size_t i = 0; i < k1_; ++i)
    for (std::size_t j = 0; j < k2_; ++j) m[j] += at(i, j);
  return m;
}

std::vector<Rational> JointDistribution::exact_marginal1() const {
  std::vector<Rational> m(k1_);
  for (std::size_t i = 0; i < k1_; ++i)
    for (std::size_t j = 0; j < k2_; ++j) m[i] += exact(i, j);
  return m;
}

std::vector<Rational> JointDistribution::exact_marginal2() const {
  std::vector<Rational> m(k2_);
  for (std::size_t i = 0; i < k1_; ++i)
    for (std::size_t j = 0; j < k2_; ++j) m[j] += exact(i, j);
  return m;
}

double entropy(std::span<const double> p) {
  double h = 0;
  for (double v : p)
    if (v > 0) h -= v * std::log(v);
  return h;
}

double joint_entropy(const JointDistribution& x) { return entropy(x.table()); }
double entropy1(const JointDistribution& x) { return entropy(x.marginal1()); }
double entropy2(const JointDistribution& x) { return entropy(x.marginal2()); }

double mutual_information(const JointDistribution& x) {
  const double i = entropy1(x) + entropy2(x) - joint_entropy(x);
  return i < 0 ? 0.0 : i;
}

JointDistribution from_graph(const BipartiteGraph& g) {
  if (!g.has_edges())
    fail(ErrorCode::InvalidArgument, "from_graph needs a graph with an edge");
  std::vector<Rational> p(g.n1() * g.n2(), Rational(0));
  const Rational w(1, g.edge_count());
  for (const Edge& e : g.edges()) p[e.u * g.n2() + e.v] = w;
  return JointDistribution::from_rational(g.n1(), g.n2(), std::move(p));
}

JointDistribution product(const JointDistribution& x, const JointDistribution& y) {
  const std::size_t k1 = x.k1() * y.k1();
  const std::size_t k2 = x.k2() * y.k2();
  const bool exact = x.is_rational() && y.is_rational();
  std::vector<double> p(k1 * k2);
  std::vector<Rational> q(exact ? k1 * k2 : 0);
  for (std::size_t a1 = 0; a1 < x.k1(); ++a1)
    for (std::size_t b1 = 0; b1 < y.k1(); ++b1)
      for (std::size_t a2 = 0; a2 < x.k2(); ++a2)
        for (std::size_t b2 = 0; b2 < y.k2(); ++b2) {
          const std::size_t cell = (a1 * y.k1() + b1) * k2 + a2 * y.k2() + b2;
          if (exact)
            q[cell] = x.exact(a1, a2) * y.exact(b1, b2);
          else
            p[cell] = x.at(a1, a2) * y.at(b1, b2);
        }
  if (exact) return JointDistribution::from_rational(k1, k2, std::move(q));
  // Renormalise so rounding in long products does not trip the sum check.
  double total = 0;
  for (double v : p) total += v;
  for (double& v : p) v /= total;
  return JointDistribution(k1, k2, std::move(p));
}

JointDistribution point_mass() {
  return JointDistribution::from_rational(1, 1, {Rational(1)});
}

JointDistribution uniform_diagonal(std::size_t k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "uniform_diagonal needs k >= 1");
  std::vector<Rational> p(k * k, Rational(0));
  for (std::size_t i = 0; i < k; ++i) p[i * k + i] = Rational(1, k);
  return JointDistribution::from_rational(k, k, std::move(p));
}

JointDistribution uniform_product(std::size_t k1, std::size_t k2) {
  if (k1 == 0 || k2 == 0)
    fail(ErrorCode::InvalidArgument, "uniform_product needs k1, k2 >= 1");
  return JointDistribution::from_rational(
      k1, k2, std::vector<Rational>(k1 * k2, Rational(1, k1 * k2)));
}

std::uint64_t default_cell_cap() {
  if (const char* env = std::getenv("LOGLIM_CAP_CELLS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultCellCap;
}

double d_star(const BipartiteGraph& h, const JointDistribution& x,
              const MaxEntOptions& options) {
  if (h == single_edge()) return mutual_information(x);
  return maxent(h, x, options).d_star;
}

double t_star(const BipartiteGraph& h, const JointDistribution& x,
              const MaxEntOptions& options) {
  return std::exp(-d_star(h, x, options));
}

double h_star(const BipartiteGraph& h, const JointDistribution& x,
              const MaxEntOptions& options) {
  if (h == single_edge()) return 1.0;
  return maxent(h, x, options).h_star;
}

SidorenkoCheck sidorenko_entropy_check(const BipartiteGraph& h,
                                       const JointDistribution& x,
                                       const MaxEntOptions& options) {
  const MaxEntSolution sol = maxent(h, x, options);
  const double hx = joint_entropy(x);
  const double h1 = entropy1(x);
  const double h2 = entropy2(x);
  double rhs = double(h.edge_count()) * hx;
  for (std::uint32_t v = 0; v < h.n1(); ++v)
    rhs -= (double(h.degree(Side::One, v)) - 1.0) * h1;
  for (std::uint32_t v = 0; v < h.n2(); ++v)
    rhs -= (double(h.degree(Side::Two, v)) - 1.0) * h2;
  SidorenkoCheck out;
  out.lhs = sol.m_value;
  out.rhs = rhs;
  out.holds = out.lhs >= out.rhs - 1e-8;
  return out;
}

}  // namespace loglim
