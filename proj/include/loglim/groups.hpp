#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "loglim/bgraph.hpp"
#include "loglim/numeric.hpp"

namespace loglim {

/// Largest order a Cayley table may have.
inline constexpr std::size_t kMaxGroupOrder = 2048;
/// Associativity is checked on every triple up to this order and on a fixed
/// pseudo-random sample above it.
inline constexpr std::size_t kFullAssociativityCheck = 256;

/// Finite group given by its Cayley table; element 0 need not be the
/// identity.
class FiniteGroup {
 public:
  /// table[a][b] = a*b. Throws Error(InvalidArgument) unless the table is a
  /// group.
  FiniteGroup(std::vector<std::vector<std::uint32_t>> table, std::string name = {});

  std::size_t order() const { return n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t identity() const { return identity_; }
  const std::string& name() const { return name_; }
  std::vector<std::vector<std::uint32_t>> table() const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t identity_ = 0;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(std::vector<std::vector<std::uint32_t>> table, std::string name = {});

/// Verified subgroup: sorted element list of a parent group.
class Subgroup {
 public:
  /// Throws Error(InvalidArgument) unless `elements` is a subgroup.
  Subgroup(GroupPtr parent, std::vector<std::uint32_t> elements);

  const GroupPtr& parent() const { return parent_; }
  const FiniteGroup& group() const { return *parent_; }
  std::span<const std::uint32_t> elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(std::uint32_t g) const { return member_[g]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<std::uint32_t> elements_;
  std::vector<bool> member_;
};

Subgroup generated_subgroup(const GroupPtr& g, std::span<const std::uint32_t> generators);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Subgroup generated by a and b together.
Subgroup join(const Subgroup& a, const Subgroup& b);

// ---- catalog -----------------------------------------------------------------

GroupPtr cyclic(std::size_t n);
/// Symmetries of the regular n-gon, order 2n (n >= 1).
GroupPtr dihedral(std::size_t n);
GroupPtr symmetric(std::size_t n);    // n <= 6
GroupPtr alternating(std::size_t n);  // n <= 6
GroupPtr quaternion();
/// Pairs (a, b) with index a * |g2| + b.
GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2);

inline constexpr std::size_t kMaxSubgroupEnumeration = 64;

/// Every subgroup, ordered by order then element list. |G| <= 64.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

/// Fixed list of groups of order <= max_order used by the catalog sweeps.
std::vector<GroupPtr> group_catalog(std::size_t max_order = 24);

struct GroupTriple {
  GroupPtr group;
  Subgroup t1;
  Subgroup t2;
};

/// (G, T1, T2) over every ordered pair of subgroups of every catalog group.
std::vector<GroupTriple> catalog_triples(std::size_t max_order = 24);

// ---- coset graphs ------------------------------------------------------------

/// Vertices are the left cosets gT1 and gT2, each side sorted by the smallest
/// element of the coset; edges are (gT1, gT2) for g in G.
BipartiteGraph coset_graph(const Subgroup& t1, const Subgroup& t2);

struct HeisenbergGroup {
  GroupPtr group;
  Subgroup t1;  // (a, 0, 0)
  Subgroup t2;  // (0, b, 0)
};

/// Upper unitriangular 3x3 matrices over F_p, element (a, b, c) at index
/// a p^2 + b p + c with a = M12, b = M23, c = M13. p must be prime.
HeisenbergGroup heisenberg(std::size_t p);

bool is_prime(std::size_t n);

/// Point-line incidence graph of PG(2, p), p prime.
BipartiteGraph projective_plane_incidence(std::size_t p);

struct WCountOptions {
  /// Refuse when the estimated number of search nodes exceeds this.
  double max_nodes = 1e10;
};

/// Number of edge labellings (g_e) with g_e g_f^{-1} in T_i whenever e and f
/// share a vertex of class i.
BigInt w_count(const BipartiteGraph& h, const Subgroup& t1, const Subgroup& t2,
               const WCountOptions& options = {});

/// |W| |T1|^{n1(H)} |T2|^{n2(H)} / (|T1 n T2|^{|E(H)|} |G|^{|V(H)|}).
Rational t_via_w(const BipartiteGraph& h, const Subgroup& t1, const Subgroup& t2,
                 const WCountOptions& options = {});

inline constexpr std::size_t kMaxAutomorphismVertices = 64;

/// True iff the label-preserving automorphism group acts transitively on
/// each class and on the edges. n1 + n2 <= 64.
bool is_edge_vertex_transitive(const BipartiteGraph& g);

}  // namespace loglim
