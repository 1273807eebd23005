#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "loglim/error.hpp"
#include "loglim/groups.hpp"

namespace loglim {

namespace {

using Table = std::vector<std::vector<std::uint32_t>>;

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

GroupPtr from_elements(std::size_t n, auto&& product, std::string name) {
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = product(a, b);
  return make_group(std::move(t), std::move(name));
}

std::vector<std::vector<std::uint8_t>> permutations(std::size_t n) {
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::uint8_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_even(const std::vector<std::uint8_t>& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

GroupPtr permutation_group(std::vector<std::vector<std::uint8_t>> perms,
                           std::string name) {
  std::map<std::vector<std::uint8_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  const std::size_t k = perms.empty() ? 0 : perms[0].size();
  return from_elements(
      perms.size(),
      [&](std::uint32_t a, std::uint32_t b) {
        // (a*b)(x) = a(b(x))
        std::vector<std::uint8_t> c(k);
        for (std::size_t x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
        return index.at(c);
      },
      std::move(name));
}

std::vector<std::uint32_t> closure(const FiniteGroup& g, std::vector<std::uint32_t> seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::uint32_t> elems;
  auto add = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = true;
      elems.push_back(x);
    }
  };
  add(g.identity());
  for (std::uint32_t s : seed) add(s);
  // Finite group: closing under products suffices.
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.mul(elems[i], elems[j]));
      add(g.mul(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

FiniteGroup::FiniteGroup(Table table, std::string name)
    : n_(table.size()), name_(std::move(name)) {
  require(n_ >= 1, "group table is empty");
  if (n_ > kMaxGroupOrder) fail_cap("group order", double(n_), double(kMaxGroupOrder));
  table_.resize(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a) {
    require(table[a].size() == n_, "group table is not square");
    std::vector<bool> seen(n_, false);
    for (std::size_t b = 0; b < n_; ++b) {
      const std::uint32_t c = table[a][b];
      require(c < n_, "group table entry out of range");
      require(!seen[c], "group table row is not a permutation");
      seen[c] = true;
      table_[a * n_ + b] = c;
    }
  }
  bool found = false;
  for (std::uint32_t e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  require(found, "group table has no identity");
  inverse_.assign(n_, 0);
  for (std::uint32_t a = 0; a < n_; ++a) {
    bool ok = false;
    for (std::uint32_t b = 0; b < n_ && !ok; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        ok = true;
      }
    require(ok, "group element without two-sided inverse");
  }
  auto assoc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  };
  if (n_ <= kFullAssociativityCheck) {
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b)
        for (std::uint32_t c = 0; c < n_; ++c)
          require(assoc(a, b, c), "group table is not associative");
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::uint32_t> pick(0, std::uint32_t(n_ - 1));
    for (int i = 0; i < 1'000'000; ++i)
      require(assoc(pick(rng), pick(rng), pick(rng)), "group table is not associative");
  }
}

Table FiniteGroup::table() const {
  Table t(n_, std::vector<std::uint32_t>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) t[a][b] = table_[a * n_ + b];
  return t;
}

GroupPtr make_group(Table table, std::string name) {
  return std::make_shared<const FiniteGroup>(std::move(table), std::move(name));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<std::uint32_t> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  require(parent_ != nullptr, "subgroup without parent group");
  const FiniteGroup& g = *parent_;
  std::sort(elements_.begin(), elements_.end());
  require(std::adjacent_find(elements_.begin(), elements_.end()) == elements_.end(),
          "subgroup element listed twice");
  member_.assign(g.order(), false);
  for (std::uint32_t x : elements_) {
    require(x < g.order(), "subgroup element out of range");
    member_[x] = true;
  }
  require(contains(g.identity()), "subgroup misses the identity");
  for (std::uint32_t a : elements_) {
    require(contains(g.inv(a)), "subgroup not closed under inverse");
    for (std::uint32_t b : elements_)
      require(contains(g.mul(a, b)), "subgroup not closed under product");
  }
}

Subgroup generated_subgroup(const GroupPtr& g, std::span<const std::uint32_t> generators) {
  for (std::uint32_t x : generators)
    if (x >= g->order()) fail(ErrorCode::IndexOutOfRange, "generator out of range");
  return Subgroup(g, closure(*g, {generators.begin(), generators.end()}));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {g->identity()}); }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<std::uint32_t> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require(a.parent() == b.parent(), "subgroups of different groups");
  std::vector<std::uint32_t> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return Subgroup(a.parent(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require(a.parent() == b.parent(), "subgroups of different groups");
  std::vector<std::uint32_t> gens(a.elements().begin(), a.elements().end());
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return generated_subgroup(a.parent(), gens);
}

GroupPtr cyclic(std::size_t n) {
  require(n >= 1, "cyclic group needs n >= 1");
  return from_elements(
      n, [n](std::uint32_t a, std::uint32_t b) { return std::uint32_t((a + b) % n); },
      "Z" + std::to_string(n));
}

GroupPtr dihedral(std::size_t n) {
  require(n >= 1, "dihedral group needs n >= 1");
  // index r + n*s for r^r s^s; s r = r^{-1} s.
  return from_elements(
      2 * n,
      [n](std::uint32_t a, std::uint32_t b) {
        const std::size_t ra = a % n, sa = a / n, rb = b % n, sb = b / n;
        const std::size_t r = sa ? (ra + n - rb) % n : (ra + rb) % n;
        return std::uint32_t(r + n * ((sa + sb) % 2));
      },
      "D" + std::to_string(n));
}

GroupPtr symmetric(std::size_t n) {
  require(n >= 1 && n <= 6, "symmetric group needs 1 <= n <= 6");
  return permutation_group(permutations(n), "S" + std::to_string(n));
}

GroupPtr alternating(std::size_t n) {
  require(n >= 1 && n <= 6, "alternating group needs 1 <= n <= 6");
  auto perms = permutations(n);
  std::erase_if(perms, [](const auto& p) { return !is_even(p); });
  return permutation_group(std::move(perms), "A" + std::to_string(n));
}

GroupPtr quaternion() {
  // Elements +-1, +-i, +-j, +-k as index 2*unit + sign, units 1,i,j,k.
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return from_elements(
      8,
      [](std::uint32_t a, std::uint32_t b) {
        const int ua = a / 2, ub = b / 2;
        const int sign = (a % 2) ^ (b % 2) ^ sign_mul[ua][ub];
        return std::uint32_t(2 * unit_mul[ua][ub] + sign);
      },
      "Q8");
}

GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2) {
  const std::size_t m = g2->order();
  return from_elements(
      g1->order() * m,
      [&](std::uint32_t a, std::uint32_t b) {
        return std::uint32_t(g1->mul(a / m, b / m) * m + g2->mul(a % m, b % m));
      },
      g1->name() + "x" + g2->name());
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  if (g->order() > kMaxSubgroupEnumeration)
    fail_cap("all_subgroups group order", double(g->order()),
             double(kMaxSubgroupEnumeration));
  std::set<std::vector<std::uint32_t>> found;
  std::vector<std::vector<std::uint32_t>> queue{{g->identity()}};
  found.insert(queue[0]);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::vector<std::uint32_t> s = queue[i];
    std::vector<bool> in(g->order(), false);
    for (std::uint32_t x : s) in[x] = true;
    for (std::uint32_t x = 0; x < g->order(); ++x) {
      if (in[x]) continue;
      std::vector<std::uint32_t> seed = s;
      seed.push_back(x);
      std::vector<std::uint32_t> next = closure(*g, std::move(seed));
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<std::vector<std::uint32_t>> sorted(found.begin(), found.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<Subgroup> out;
  for (auto& s : sorted) out.emplace_back(g, std::move(s));
  return out;
}

std::vector<GroupPtr> group_catalog(std::size_t max_order) {
  std::vector<GroupPtr> all;
  for (std::size_t n = 1; n <= 24; ++n) all.push_back(cyclic(n));
  for (std::size_t n = 2; n <= 12; ++n) all.push_back(dihedral(n));
  all.push_back(quaternion());
  all.push_back(alternating(4));
  all.push_back(symmetric(4));
  const GroupPtr z2 = cyclic(2), z3 = cyclic(3), z4 = cyclic(4);
  all.push_back(direct_product(z2, z2));
  all.push_back(direct_product(direct_product(z2, z2), z2));
  all.push_back(direct_product(z2, z4));
  all.push_back(direct_product(z3, z3));
  all.push_back(direct_product(z4, z4));
  all.push_back(direct_product(z2, dihedral(4)));
  all.push_back(direct_product(z2, quaternion()));
  all.push_back(direct_product(z3, dihedral(3)));
  all.push_back(direct_product(z2, alternating(4)));
  all.push_back(direct_product(z3, quaternion()));
  all.push_back(heisenberg(2).group);
  std::erase_if(all, [&](const GroupPtr& g) { return g->order() > max_order; });
  return all;
}

std::vector<GroupTriple> catalog_triples(std::size_t max_order) {
  std::vector<GroupTriple> out;
  for (const GroupPtr& g : group_catalog(max_order)) {
    const std::vector<Subgroup> subs = all_subgroups(g);
    for (const Subgroup& a : subs)
      for (const Subgroup& b : subs) out.push_back({g, a, b});
  }
  return out;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

HeisenbergGroup heisenberg(std::size_t p) {
  require(is_prime(p), "heisenberg needs a prime p");
  const std::size_t q = p * p;
  GroupPtr g = from_elements(
      p * q,
      [p, q](std::uint32_t x, std::uint32_t y) {
        const std::size_t a = x / q, b = (x / p) % p, c = x % p;
        const std::size_t a2 = y / q, b2 = (y / p) % p, c2 = y % p;
        return std::uint32_t(((a + a2) % p) * q + ((b + b2) % p) * p +
                             (c + c2 + a * b2) % p);
      },
      "U" + std::to_string(p));
  std::vector<std::uint32_t> e1, e2;
  for (std::size_t t = 0; t < p; ++t) {
    e1.push_back(std::uint32_t(t * q));
    e2.push_back(std::uint32_t(t * p));
  }
  HeisenbergGroup out{g, Subgroup(g, e1), Subgroup(g, e2)};
  if (out.t1.order() != p || out.t2.order() != p ||
      intersection(out.t1, out.t2).order() != 1 || g->order() != p * q)
    fail(ErrorCode::InvalidArgument, "heisenberg construction failed its size checks");
  return out;
}

BipartiteGraph projective_plane_incidence(std::size_t p) {
  require(is_prime(p), "projective plane needs a prime p");
  // Normalised vectors: first non-zero coordinate equal to 1.
  std::vector<std::array<std::size_t, 3>> pts;
  for (std::size_t b = 0; b < p; ++b)
    for (std::size_t c = 0; c < p; ++c) pts.push_back({1, b, c});
  for (std::size_t c = 0; c < p; ++c) pts.push_back({0, 1, c});
  pts.push_back({0, 0, 1});
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < pts.size(); ++i)
    for (std::uint32_t j = 0; j < pts.size(); ++j) {
      const std::size_t dot =
          pts[i][0] * pts[j][0] + pts[i][1] * pts[j][1] + pts[i][2] * pts[j][2];
      if (dot % p == 0) edges.push_back({i, j});
    }
  const std::size_t n = p * p + p + 1;
  BipartiteGraph g(n, n, std::move(edges));
  if (g.edge_count() != (p + 1) * n)
    fail(ErrorCode::InvalidArgument, "projective plane has the wrong edge count");
  return g;
}

}  // namespace loglim
