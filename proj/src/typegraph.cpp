#include <algorithm>
#include <cmath>
#include <map>

#include "loglim/error.hpp"
#include "loglim/limits.hpp"

namespace loglim {

namespace {

using Word = std::vector<std::uint8_t>;

std::size_t integral_count(const Rational& p, std::size_t N) {
  const Rational c = p * N;
  if (denominator(c) != 1)
    fail(ErrorCode::InvalidArgument,
         "type graph needs N nu integral; N nu = " + to_string(c));
  return static_cast<std::size_t>(numerator(c));
}

double log_multinomial(const std::vector<std::size_t>& counts) {
  std::size_t total = 0;
  double r = 0;
  for (std::size_t c : counts) {
    total += c;
    r -= std::lgamma(double(c) + 1);
  }
  return r + std::lgamma(double(total) + 1);
}

// All words with counts[s] copies of symbol s, in lexicographic order.
std::vector<Word> arrangements(const std::vector<std::size_t>& counts) {
  Word w;
  for (std::size_t s = 0; s < counts.size(); ++s) w.insert(w.end(), counts[s], std::uint8_t(s));
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

void check_size(const char* what, double log_size, std::size_t cap) {
  if (log_size > std::log(double(cap)) + 1e-9)
    fail_cap(what, std::round(std::exp(log_size)), double(cap));
}

}  // namespace

bool type_feasible(const JointDistribution& nu, std::size_t N) {
  if (!nu.is_rational()) fail(ErrorCode::InvalidArgument, "type graph needs a rational nu");
  if (N == 0) return false;
  for (std::size_t i = 0; i < nu.k1(); ++i)
    for (std::size_t j = 0; j < nu.k2(); ++j)
      if (denominator(Rational(nu.exact(i, j) * N)) != 1) return false;
  return true;
}

BipartiteGraph type_graph(const JointDistribution& nu, std::size_t N,
                          std::size_t class_cap, std::size_t edge_cap) {
  if (!nu.is_rational()) fail(ErrorCode::InvalidArgument, "type graph needs a rational nu");
  if (N == 0) fail(ErrorCode::InvalidArgument, "type graph needs N >= 1");
  if (nu.k1() > 255 || nu.k2() > 255)
    fail(ErrorCode::InvalidArgument, "type graph alphabets must have at most 255 symbols");
  const std::size_t k1 = nu.k1(), k2 = nu.k2();
  std::vector<std::vector<std::size_t>> joint(k1, std::vector<std::size_t>(k2));
  std::vector<std::size_t> c1(k1, 0), c2(k2, 0);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k2; ++j) {
      joint[i][j] = integral_count(nu.exact(i, j), N);
      c1[i] += joint[i][j];
      c2[j] += joint[i][j];
    }
  check_size("type graph class-1 size", log_multinomial(c1), class_cap);
  check_size("type graph class-2 size", log_multinomial(c2), class_cap);
  double log_fibre = 0;
  for (std::size_t i = 0; i < k1; ++i) log_fibre += log_multinomial(joint[i]);
  check_size("type graph edges", log_multinomial(c1) + log_fibre, edge_cap);

  const std::vector<Word> v1 = arrangements(c1);
  const std::vector<Word> v2 = arrangements(c2);
  std::map<Word, std::uint32_t> index2;
  for (std::uint32_t t = 0; t < v2.size(); ++t) index2.emplace(v2[t], t);
  // Fibre over a class-1 word: positions holding symbol i get an arrangement
  // of the row joint[i].
  std::vector<std::vector<Word>> row_words(k1);
  for (std::size_t i = 0; i < k1; ++i) row_words[i] = arrangements(joint[i]);

  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> positions(k1);
  Word t(N);
  std::vector<std::size_t> pick(k1);
  for (std::uint32_t s = 0; s < v1.size(); ++s) {
    for (auto& p : positions) p.clear();
    for (std::size_t x = 0; x < N; ++x) positions[v1[s][x]].push_back(x);
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      for (std::size_t i = 0; i < k1; ++i)
        for (std::size_t r = 0; r < positions[i].size(); ++r)
          t[positions[i][r]] = row_words[i][pick[i]][r];
      edges.push_back({s, index2.at(t)});
      std::size_t i = 0;
      while (i < k1 && ++pick[i] == row_words[i].size()) pick[i++] = 0;
      if (i == k1) break;
    }
  }
  BipartiteGraph g(v1.size(), v2.size(), std::move(edges));
  // The coordinate-permuting action is transitive on each class, so the
  // degrees must be constant.
  for (Side side : {Side::One, Side::Two})
    for (std::uint32_t v = 1; v < g.size(side); ++v)
      if (g.degree(side, v) != g.degree(side, 0))
        fail(ErrorCode::InvalidArgument, "type graph is not biregular");
  return g;
}

std::vector<TypeGraphRow> main_theorem_experiment(const JointDistribution& nu,
                                                  const BipartiteGraph& h,
                                                  const std::vector<std::size_t>& Ns,
                                                  const MaxEntOptions& options) {
  const double hs = h_star(h, nu, options);
  std::vector<TypeGraphRow> rows;
  for (std::size_t N : Ns) {
    const BipartiteGraph g = type_graph(nu, N);
    TypeGraphRow row;
    row.N = N;
    row.n1 = g.n1();
    row.n2 = g.n2();
    row.edges = g.edge_count();
    row.h = h_density(h, g);
    row.h_star = hs;
    row.gap = row.h - hs;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace loglim
