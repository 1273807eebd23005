#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "loglim/bgraph.hpp"
#include "loglim/error.hpp"

namespace loglim {

// Rows are encoded as masks with column j at bit (n2 - 1 - j), so comparing
// masks numerically is comparing the row strings lexicographically. The
// row-major bitmap order is then the lexicographic order of the row-mask
// sequence. For a fixed column order the best row order is "sort rows"; for
// a fixed row order the best column order is "sort columns top-down". Either
// way only the smaller class has to be permuted explicitly.

namespace {

constexpr std::size_t kMaxMaskWidth = 32;

using Masks = std::vector<std::uint32_t>;

Masks row_masks(const BipartiteGraph& g, const std::vector<std::uint32_t>& col_pos) {
  // col_pos[v] = position of original column v.
  Masks rows(g.n1(), 0);
  const auto n2 = static_cast<std::uint32_t>(g.n2());
  for (const Edge& e : g.edges()) rows[e.u] |= 1u << (n2 - 1 - col_pos[e.v]);
  return rows;
}

Masks best_by_permuting_columns(const BipartiteGraph& g) {
  std::vector<std::uint32_t> perm(g.n2());
  std::iota(perm.begin(), perm.end(), 0);
  Masks best;
  do {
    Masks rows = row_masks(g, perm);
    std::sort(rows.begin(), rows.end());
    if (best.empty() || rows < best) best = std::move(rows);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Masks best_by_permuting_rows(const BipartiteGraph& g) {
  const auto n1 = static_cast<std::uint32_t>(g.n1());
  const auto n2 = static_cast<std::uint32_t>(g.n2());
  std::vector<std::uint32_t> perm(n1);  // perm[position] = original row
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> row_pos(n1);
  Masks best;
  Masks cols(n2);
  do {
    for (std::uint32_t p = 0; p < n1; ++p) row_pos[perm[p]] = p;
    std::fill(cols.begin(), cols.end(), 0u);
    for (const Edge& e : g.edges()) cols[e.v] |= 1u << (n1 - 1 - row_pos[e.u]);
    Masks sorted_cols = cols;
    std::sort(sorted_cols.begin(), sorted_cols.end());
    Masks rows(n1, 0);
    for (std::uint32_t c = 0; c < n2; ++c)
      for (std::uint32_t r = 0; r < n1; ++r)
        if (sorted_cols[c] & (1u << (n1 - 1 - r))) rows[r] |= 1u << (n2 - 1 - c);
    if (best.empty() || rows < best) best = std::move(rows);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Masks canonical_masks(const BipartiteGraph& g) {
  if (std::max(g.n1(), g.n2()) > kMaxMaskWidth ||
      std::min(g.n1(), g.n2()) > kCanonicalMaxPermuted)
    fail_cap("canonical_key class size", double(std::min(g.n1(), g.n2())),
             double(kCanonicalMaxPermuted));
  return g.n2() <= g.n1() ? best_by_permuting_columns(g)
                          : best_by_permuting_rows(g);
}

CanonicalKey key_from_masks(std::size_t n1, std::size_t n2, const Masks& rows) {
  CanonicalKey key;
  key.bytes.reserve(2 + 4 * rows.size());
  key.bytes.push_back(static_cast<std::uint8_t>(n1));
  key.bytes.push_back(static_cast<std::uint8_t>(n2));
  for (std::uint32_t r : rows)
    for (int shift = 24; shift >= 0; shift -= 8)
      key.bytes.push_back(static_cast<std::uint8_t>(r >> shift));
  return key;
}

BipartiteGraph graph_from_masks(std::size_t n1, std::size_t n2, const Masks& rows) {
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < n1; ++u)
    for (std::uint32_t v = 0; v < n2; ++v)
      if (rows[u] & (1u << (n2 - 1 - v))) edges.push_back({u, v});
  return BipartiteGraph(n1, n2, std::move(edges));
}

}  // namespace

std::string CanonicalKey::hex() const {
  std::string out;
  out.reserve(2 * bytes.size());
  char buf[3];
  for (std::uint8_t b : bytes) {
    std::snprintf(buf, sizeof buf, "%02x", b);
    out += buf;
  }
  return out;
}

CanonicalKey canonical_key(const BipartiteGraph& g) {
  return key_from_masks(g.n1(), g.n2(), canonical_masks(g));
}

BipartiteGraph canonical_form(const BipartiteGraph& g) {
  return graph_from_masks(g.n1(), g.n2(), canonical_masks(g));
}

double kappa_weight(const CanonicalKey& key) {
  const double n = double(key.bytes.at(0)) + double(key.bytes.at(1));
  return std::exp2(-n * n);
}

std::vector<TestGraph> enumerate_test_graphs(std::size_t cap) {
  if (cap > kMaxEnumerationCap)
    fail_cap("enumerate_test_graphs cap", double(cap), double(kMaxEnumerationCap));
  std::vector<TestGraph> out;
  for (std::size_t total = 2; total <= cap; ++total) {
    std::map<CanonicalKey, BipartiteGraph> classes;
    for (std::size_t n1 = 1; n1 < total; ++n1) {
      const std::size_t n2 = total - n1;
      const std::uint32_t full = (1u << n2) - 1;
      // Every class has a representative with non-decreasing row masks, so
      // enumerate multisets of non-zero rows only.
      Masks rows(n1, 1);
      while (true) {
        std::uint32_t cover = 0;
        for (std::uint32_t r : rows) cover |= r;
        if (cover == full) {
          BipartiteGraph g = graph_from_masks(n1, n2, rows);
          CanonicalKey key = canonical_key(g);
          classes.try_emplace(std::move(key), std::move(g));
        }
        // next non-decreasing sequence over [1, full]
        std::size_t i = n1;
        while (i > 0 && rows[i - 1] == full) --i;
        if (i == 0) break;
        ++rows[i - 1];
        for (std::size_t j = i; j < n1; ++j) rows[j] = rows[i - 1];
      }
    }
    for (auto& [key, g] : classes) out.push_back({key, canonical_form(g)});
  }
  return out;
}

}  // namespace loglim
