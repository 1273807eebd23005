#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "loglim/error.hpp"
#include "loglim/io.hpp"

namespace loglim {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

void require_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) fail(ErrorCode::Parse, std::string(what) + ": expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key))
      fail(ErrorCode::Parse, std::string(what) + ": unknown key '" + key + "'");
  for (const std::string& key : allowed)
    if (!j.contains(key))
      fail(ErrorCode::Parse, std::string(what) + ": missing key '" + key + "'");
}

std::uint64_t as_count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    fail(ErrorCode::Parse, std::string(what) + ": expected a non-negative integer");
  return j.get<std::uint64_t>();
}

json rational_to_json(const Rational& r) {
  return json::array({to_string(numerator(r)), to_string(denominator(r))});
}

Rational rational_from_json(const json& j) {
  auto part = [](const json& x) -> BigInt {
    if (x.is_number_integer()) return BigInt(x.get<std::int64_t>());
    if (x.is_string()) {
      const Rational r = parse_rational(x.get<std::string>());
      if (denominator(r) != 1) fail(ErrorCode::Parse, "rational part must be an integer");
      return numerator(r);
    }
    fail(ErrorCode::Parse, "rational part must be an integer or integer string");
  };
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::Parse, "rational must be [num, den]");
  const BigInt den = part(j[1]);
  if (den == 0) fail(ErrorCode::Parse, "zero denominator");
  return Rational(part(j[0]), den);
}

// Reads an unsigned decimal that must make up all of `s`.
std::size_t parse_size(const std::string& s, const std::string& spec) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail(ErrorCode::Parse, "bad number in '" + spec + "'");
  return v;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

bool looks_like_file(const std::string& spec) {
  return spec.find('/') != std::string::npos || spec.find('.') != std::string::npos;
}

}  // namespace

std::string graph_to_json(const BipartiteGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"n1", g.n1()}, {"n2", g.n2()}, {"edges", edges}}.dump();
}

BipartiteGraph graph_from_json(const std::string& text) {
  const json j = parse_json(text);
  require_keys(j, {"n1", "n2", "edges"}, "graph");
  const std::size_t n1 = as_count(j["n1"], "graph n1");
  const std::size_t n2 = as_count(j["n2"], "graph n2");
  if (!j["edges"].is_array()) fail(ErrorCode::Parse, "graph edges must be an array");
  std::vector<Edge> edges;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) fail(ErrorCode::Parse, "graph edge must be [i, j]");
    const std::uint64_t u = as_count(e[0], "edge endpoint");
    const std::uint64_t v = as_count(e[1], "edge endpoint");
    if (u >= n1 || v >= n2)
      fail(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(u) + "," +
                                           std::to_string(v) + ") out of range");
    edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
  }
  return BipartiteGraph(n1, n2, std::move(edges));
}

std::string distribution_to_json(const JointDistribution& x) {
  json rows = json::array();
  for (std::size_t i = 0; i < x.k1(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < x.k2(); ++j)
      row.push_back(x.is_rational() ? rational_to_json(x.exact(i, j)) : json(x.at(i, j)));
    rows.push_back(row);
  }
  return json{{"k1", x.k1()}, {"k2", x.k2()}, {"p", rows}}.dump();
}

JointDistribution distribution_from_json(const std::string& text) {
  const json j = parse_json(text);
  require_keys(j, {"k1", "k2", "p"}, "distribution");
  const std::size_t k1 = as_count(j["k1"], "distribution k1");
  const std::size_t k2 = as_count(j["k2"], "distribution k2");
  const json& p = j["p"];
  if (!p.is_array() || p.size() != k1)
    fail(ErrorCode::Parse, "distribution p must have k1 rows");
  bool all_exact = true;
  for (const json& row : p) {
    if (!row.is_array() || row.size() != k2)
      fail(ErrorCode::Parse, "distribution rows must have k2 entries");
    for (const json& v : row)
      if (!v.is_array() && !v.is_number_integer()) all_exact = false;
  }
  if (all_exact) {
    std::vector<Rational> q;
    for (const json& row : p)
      for (const json& v : row)
        q.push_back(v.is_array() ? rational_from_json(v) : Rational(v.get<std::int64_t>()));
    return JointDistribution::from_rational(k1, k2, std::move(q));
  }
  std::vector<double> q;
  for (const json& row : p)
    for (const json& v : row) {
      if (v.is_array())
        q.push_back(to_double(rational_from_json(v)));
      else if (v.is_number())
        q.push_back(v.get<double>());
      else
        fail(ErrorCode::Parse, "distribution entry must be a number or [num, den]");
    }
  return JointDistribution(k1, k2, std::move(q));
}

std::string group_to_json(const FiniteGroup& g) {
  return json{{"order", g.order()}, {"table", g.table()}}.dump();
}

GroupPtr group_from_json(const std::string& text) {
  const json j = parse_json(text);
  require_keys(j, {"order", "table"}, "group");
  const std::size_t n = as_count(j["order"], "group order");
  const json& t = j["table"];
  if (!t.is_array() || t.size() != n) fail(ErrorCode::Parse, "group table must have order rows");
  std::vector<std::vector<std::uint32_t>> table;
  for (const json& row : t) {
    if (!row.is_array() || row.size() != n)
      fail(ErrorCode::Parse, "group table rows must have order entries");
    std::vector<std::uint32_t> r;
    for (const json& v : row) r.push_back(static_cast<std::uint32_t>(as_count(v, "group entry")));
    table.push_back(std::move(r));
  }
  return make_group(std::move(table), "file");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(ErrorCode::Io, "cannot read '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail(ErrorCode::Io, "cannot write '" + path + "'");
}

BipartiteGraph resolve_graph(const std::string& spec) {
  if (spec == "p1") return single_edge();
  if (starts_with(spec, "heisenberg:")) {
    const HeisenbergGroup h = heisenberg(parse_size(spec.substr(11), spec));
    return coset_graph(h.t1, h.t2);
  }
  if (starts_with(spec, "pg:")) return projective_plane_incidence(parse_size(spec.substr(3), spec));
  if (starts_with(spec, "rpath")) return path(parse_size(spec.substr(5), spec), Side::Two);
  if (starts_with(spec, "path")) return path(parse_size(spec.substr(4), spec));
  if (starts_with(spec, "matching")) return matching(parse_size(spec.substr(8), spec));
  if (starts_with(spec, "star")) return star_center_one(parse_size(spec.substr(4), spec));
  if (!looks_like_file(spec)) {
    if (spec.size() > 1 && spec[0] == 'c') return even_cycle(parse_size(spec.substr(1), spec));
    if (spec.size() > 1 && spec[0] == 'k') {
      const auto comma = spec.find(',');
      if (comma == std::string::npos) fail(ErrorCode::Parse, "expected k<a>,<b> in '" + spec + "'");
      return complete(parse_size(spec.substr(1, comma - 1), spec),
                      parse_size(spec.substr(comma + 1), spec));
    }
    fail(ErrorCode::Parse, "unknown graph '" + spec + "'");
  }
  return graph_from_json(read_file(spec));
}

JointDistribution resolve_distribution(const std::string& spec) {
  if (spec == "point") return point_mass();
  if (starts_with(spec, "graph:")) return from_graph(resolve_graph(spec.substr(6)));
  if (starts_with(spec, "diag")) return uniform_diagonal(parse_size(spec.substr(4), spec));
  if (starts_with(spec, "unif")) {
    const auto x = spec.find('x', 4);
    if (x == std::string::npos) fail(ErrorCode::Parse, "expected unif<a>x<b> in '" + spec + "'");
    return uniform_product(parse_size(spec.substr(4, x - 4), spec),
                           parse_size(spec.substr(x + 1), spec));
  }
  if (!looks_like_file(spec)) fail(ErrorCode::Parse, "unknown distribution '" + spec + "'");
  return distribution_from_json(read_file(spec));
}

GroupPtr resolve_group(const std::string& spec) {
  if (spec == "q8") return quaternion();
  if (starts_with(spec, "cyclic:")) return cyclic(parse_size(spec.substr(7), spec));
  if (starts_with(spec, "dihedral:")) return dihedral(parse_size(spec.substr(9), spec));
  if (starts_with(spec, "symmetric:")) return symmetric(parse_size(spec.substr(10), spec));
  if (starts_with(spec, "alternating:")) return alternating(parse_size(spec.substr(12), spec));
  if (starts_with(spec, "heisenberg:")) return heisenberg(parse_size(spec.substr(11), spec)).group;
  if (!looks_like_file(spec)) fail(ErrorCode::Parse, "unknown group '" + spec + "'");
  return group_from_json(read_file(spec));
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string profile_to_json(const LimitProfile& p) {
  json entries = json::array();
  for (const auto& [key, value] : p.entries)
    entries.push_back({{"key", key.hex()}, {"n1", key.bytes[0]}, {"n2", key.bytes[1]},
                       {"h", value}});
  return json{{"cap", p.cap}, {"entries", entries}}.dump();
}

std::vector<std::pair<std::string, BipartiteGraph>> sidorenko_families() {
  return {{"p1", single_edge()},   {"path2", path(2)}, {"rpath2", path(2, Side::Two)},
          {"path3", path(3)},      {"c4", even_cycle(4)}, {"c6", even_cycle(6)},
          {"k2,3", complete(2, 3)}, {"k3,2", complete(3, 2)}, {"k3,3", complete(3, 3)}};
}

std::vector<DensitySweepRow> sidorenko_density_sweep(
    const std::vector<GroupTriple>& triples,
    const std::vector<std::pair<std::string, BipartiteGraph>>& hs) {
  std::vector<DensitySweepRow> rows;
  for (const GroupTriple& tr : triples) {
    const BipartiteGraph g = coset_graph(tr.t1, tr.t2);
    const double tp1 = t_density(single_edge(), g);
    for (const auto& [name, h] : hs) {
      DensitySweepRow r;
      r.group = tr.group->name();
      r.t1 = tr.t1.order();
      r.t2 = tr.t2.order();
      r.h_key = canonical_key(h).hex();
      r.h_name = name;
      r.t = t_density(h, g);
      r.bound = std::pow(tp1, double(h.edge_count()));
      r.margin = r.t - r.bound;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<DensitySweepRow>& rows) {
  std::string out = "group,t1,t2,h_key,h,t,bound,margin\n";
  for (const DensitySweepRow& r : rows)
    out += r.group + "," + std::to_string(r.t1) + "," + std::to_string(r.t2) + "," +
           r.h_key + "," + r.h_name + "," + format_double(r.t) + "," +
           format_double(r.bound) + "," + format_double(r.margin) + "\n";
  return out;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "n,median_h,q25,q75,R,median_abs_error,undefined\n";
  for (const ConvergenceRow& r : rows)
    out += std::to_string(r.n) + "," + format_double(r.stats.median) + "," +
           format_double(r.stats.q25) + "," + format_double(r.stats.q75) + "," +
           format_double(r.stats.target) + "," + format_double(r.stats.median_abs_error) +
           "," + std::to_string(r.stats.undefined) + "\n";
  return out;
}

std::string main_theorem_csv(const std::vector<TypeGraphRow>& rows) {
  std::string out = "N,n1,n2,edges,h,h_star,gap\n";
  for (const TypeGraphRow& r : rows)
    out += std::to_string(r.N) + "," + std::to_string(r.n1) + "," + std::to_string(r.n2) +
           "," + std::to_string(r.edges) + "," + format_double(r.h) + "," +
           format_double(r.h_star) + "," + format_double(r.gap) + "\n";
  return out;
}

std::string sparsity_to_json(const SparsityReport& r) {
  json g = json::object(), t = json::object();
  for (const auto& [n, v] : r.g_values) g[std::to_string(n)] = v;
  for (const auto& [n, v] : r.t_values) t[std::to_string(n)] = v;
  json out{{"beta_v", r.beta_v}, {"beta_e", r.beta_e}, {"g_values", g}, {"t_values", t}};
  out["beta_hat"] = std::isfinite(r.beta_hat) ? json(r.beta_hat) : json(nullptr);
  return out.dump();
}

}  // namespace loglim
