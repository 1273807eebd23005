#pragma once

#include <string>
#include <vector>

#include "loglim/bgraph.hpp"
#include "loglim/entropy.hpp"
#include "loglim/groups.hpp"
#include "loglim/limits.hpp"
#include "loglim/randgraph.hpp"

namespace loglim {

// ---- file formats --------------------------------------------------------------
// Graph:        {"n1": int, "n2": int, "edges": [[i, j], ...]}
// Distribution: {"k1": int, "k2": int, "p": [[...], ...]} with floats or
//               [num, den] pairs
// Group:        {"order": n, "table": [[...], ...]}
// Unknown keys are rejected with Error(Parse).

std::string graph_to_json(const BipartiteGraph& g);
BipartiteGraph graph_from_json(const std::string& text);

/// Rational distributions are written as [num, den] pairs.
std::string distribution_to_json(const JointDistribution& x);
JointDistribution distribution_from_json(const std::string& text);

std::string group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// ---- named objects ---------------------------------------------------------------
// Graphs: p1, c<2k>, path<m>, rpath<m> (starting in class 2), k<a>,<b>,
//   star<n>, matching<m>, heisenberg:<p>, pg:<p>, or a JSON file path.
// Distributions: diag<k>, unif<a>x<b>, point, graph:<graph spec>, or a JSON
//   file path.
// Groups: cyclic:<n>, dihedral:<n>, symmetric:<n>, alternating:<n>, q8,
//   heisenberg:<p>, or a JSON file path.

BipartiteGraph resolve_graph(const std::string& spec);
JointDistribution resolve_distribution(const std::string& spec);
GroupPtr resolve_group(const std::string& spec);

/// Formats a double with %.17g; non-finite values become "inf", "-inf", "nan".
std::string format_double(double v);

// ---- reports -----------------------------------------------------------------------

std::string profile_to_json(const LimitProfile& p);

struct DensitySweepRow {
  std::string group;
  std::size_t t1 = 0, t2 = 0;
  std::string h_key;
  std::string h_name;
  double t = 0;
  double bound = 0;   // t(P1)^{|E(H)|}
  double margin = 0;  // t - bound
};

/// t(H, G(G,T1,T2)) against t(P1, .)^{|E(H)|} for every catalog triple.
std::vector<DensitySweepRow> sidorenko_density_sweep(
    const std::vector<GroupTriple>& triples,
    const std::vector<std::pair<std::string, BipartiteGraph>>& hs);

/// Default test families of the sweep: paths, even cycles and K_{a,b}.
std::vector<std::pair<std::string, BipartiteGraph>> sidorenko_families();

std::string sweep_csv(const std::vector<DensitySweepRow>& rows);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
std::string main_theorem_csv(const std::vector<TypeGraphRow>& rows);
std::string sparsity_to_json(const SparsityReport& r);

}  // namespace loglim
