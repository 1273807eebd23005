// loglim command line front end. Talks to the library only through loglim.h.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "loglim.h"

using nlohmann::json;

namespace {

struct Failure {
  loglim_status status;
  std::string message;
};

void check(loglim_status st) {
  if (st != LOGLIM_OK) throw Failure{st, loglim_last_error()};
}

struct GraphFree {
  void operator()(loglim_graph* g) const { loglim_graph_free(g); }
};
struct DistFree {
  void operator()(loglim_dist* x) const { loglim_dist_free(x); }
};
struct GroupFree {
  void operator()(loglim_group* g) const { loglim_group_free(g); }
};
struct SubgroupFree {
  void operator()(loglim_subgroup* s) const { loglim_subgroup_free(s); }
};
using Graph = std::unique_ptr<loglim_graph, GraphFree>;
using Dist = std::unique_ptr<loglim_dist, DistFree>;
using Group = std::unique_ptr<loglim_group, GroupFree>;
using Sub = std::unique_ptr<loglim_subgroup, SubgroupFree>;

Graph graph(const std::string& spec) {
  loglim_graph* g = nullptr;
  check(loglim_graph_from_spec(spec.c_str(), &g));
  return Graph(g);
}

Dist dist(const std::string& spec) {
  loglim_dist* x = nullptr;
  check(loglim_dist_from_spec(spec.c_str(), &x));
  return Dist(x);
}

Group group(const std::string& spec) {
  loglim_group* g = nullptr;
  check(loglim_group_from_spec(spec.c_str(), &g));
  return Group(g);
}

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  loglim_string_free(s);
  return out;
}

template <class F>
std::string text(F&& f) {
  char* s = nullptr;
  check(f(&s));
  return take(s);
}

json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

template <class T>
std::vector<T> parse_list(const std::string& s, const char* what) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size())
      throw Failure{LOGLIM_ERR_PARSE, std::string("bad ") + what + " entry '" + item + "'"};
    out.push_back(static_cast<T>(v));
  }
  return out;
}

json csv_rows(const std::string& csv) {
  std::stringstream in(csv);
  std::string line;
  std::vector<std::string> header;
  json rows = json::array();
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::stringstream ls(l);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    return cells;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header.empty()) {
      header = split(line);
      continue;
    }
    const auto cells = split(line);
    json row = json::object();
    for (std::size_t i = 0; i < cells.size() && i < header.size(); ++i) {
      const std::string& c = cells[i];
      // Canonical keys are hex strings that may look like numbers.
      if (header[i].find("key") != std::string::npos) {
        row[header[i]] = c;
        continue;
      }
      char* end = nullptr;
      const double v = std::strtod(c.c_str(), &end);
      const bool numeric = !c.empty() && end == c.c_str() + c.size() && std::isfinite(v);
      long long n = 0;
      const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), n);
      if (numeric && ec == std::errc() && ptr == c.data() + c.size())
        row[header[i]] = n;
      else
        row[header[i]] = numeric ? json(v) : json(c);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

// One CSV table from a flat JSON object of scalars.
std::string object_csv(const json& values) {
  std::string head, row;
  for (const auto& [k, v] : values.items()) {
    if (v.is_object() || v.is_array()) continue;
    head += (head.empty() ? "" : ",") + k;
    row += (row.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return head + "\n" + row + "\n";
}

struct Options {
  std::string H = "c4", G, G2, X, group, t1, t2;
  std::string beta = "3/4", alpha = "1/2";
  std::string n;
  std::size_t trials = 50;
  std::uint64_t seed = 42;
  std::size_t cap = 0;
  double tol = 1e-10;
  std::size_t max_sweeps = 10000;
  std::string out;
  std::string format = "json";
  bool r_only = false;
  bool export_graph = false;
};

class Runner {
 public:
  Runner(std::string command, const Options& o) : command_(std::move(command)), o_(o) {}

  // Echoed into every output.
  json config = json::object();

  void emit_json(json body) {
    json doc = json::object();
    doc["config"] = config;
    for (auto& [k, v] : body.items()) doc[k] = v;
    write(doc.dump(2) + "\n");
  }

  void emit_csv(const std::string& csv) {
    std::string head = "# loglim " + command_;
    for (const auto& [k, v] : config.items())
      head += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    head += " generated=" + timestamp() + "\n";
    write(head + csv);
  }

  // Table-shaped results: CSV as is, or rows as JSON objects.
  void emit_table(const std::string& csv, json extra = json::object()) {
    if (o_.format == "csv") return emit_csv(csv);
    extra["rows"] = csv_rows(csv);
    emit_json(extra);
  }

  // Scalar results.
  void emit_values(const json& values) {
    if (o_.format == "csv") return emit_csv(object_csv(values));
    emit_json(values);
  }

 private:
  void write(const std::string& s) {
    if (o_.out.empty()) {
      std::cout << s;
      std::cout.flush();
      return;
    }
    std::ofstream f(o_.out, std::ios::binary);
    if (!f) throw Failure{LOGLIM_ERR_IO, "cannot open '" + o_.out + "' for writing"};
    f << s;
    if (!f) throw Failure{LOGLIM_ERR_IO, "cannot write '" + o_.out + "'"};
  }

  std::string command_;
  const Options& o_;
};

Sub subgroup(const loglim_group* g, const std::string& gens) {
  const auto list = parse_list<std::uint32_t>(gens, "generator");
  loglim_subgroup* s = nullptr;
  check(loglim_subgroup_generated(g, list.data(), list.size(), &s));
  return Sub(s);
}

// Group plus (T1, T2); heisenberg:p defaults to its two standard subgroups.
struct Triple {
  Group g;
  Sub t1, t2;
};

Triple triple(const Options& o) {
  Triple t;
  const std::string prefix = "heisenberg:";
  if (o.group.rfind(prefix, 0) == 0 && o.t1.empty() && o.t2.empty()) {
    const auto p = parse_list<std::size_t>(o.group.substr(prefix.size()), "prime");
    if (p.size() != 1) throw Failure{LOGLIM_ERR_PARSE, "bad group '" + o.group + "'"};
    loglim_group* g = nullptr;
    loglim_subgroup *a = nullptr, *b = nullptr;
    check(loglim_heisenberg(p[0], &g, &a, &b));
    t.g.reset(g);
    t.t1.reset(a);
    t.t2.reset(b);
    return t;
  }
  t.g = group(o.group);
  t.t1 = subgroup(t.g.get(), o.t1);
  t.t2 = subgroup(t.g.get(), o.t2);
  return t;
}

json subgroup_json(const loglim_subgroup* s) {
  size_t count = 0;
  check(loglim_subgroup_elements(s, nullptr, 0, &count));
  std::vector<std::uint32_t> el(count);
  check(loglim_subgroup_elements(s, el.data(), el.size(), &count));
  return el;
}

void need_flag(const std::string& value, const char* flag) {
  if (value.empty()) throw Failure{LOGLIM_ERR_INVALID, std::string(flag) + " is required"};
}

void run_density(const Options& o, Runner& r) {
  need_flag(o.G, "--G");
  r.config = {{"H", o.H}, {"G", o.G}, {"format", o.format}};
  const Graph h = graph(o.H), g = graph(o.G);
  json v;
  v["hom"] = text([&](char** s) { return loglim_hom_count(h.get(), g.get(), s); });
  v["t_exact"] = text([&](char** s) { return loglim_t_exact(h.get(), g.get(), s); });
  double t = 0, d = 0, hv = 0;
  check(loglim_t_density(h.get(), g.get(), &t));
  check(loglim_d_density(h.get(), g.get(), &d));
  v["t"] = number(t);
  v["d"] = number(d);
  if (loglim_h_density(h.get(), g.get(), &hv) == LOGLIM_OK)
    v["h"] = number(hv);
  else
    v["h"] = nullptr;
  r.emit_values(v);
}

void run_profile(const Options& o, Runner& r) {
  need_flag(o.G, "--G");
  const std::size_t cap = o.cap ? o.cap : 5;
  r.config = {{"G", o.G}, {"cap", cap}, {"format", o.format}};
  const Graph g = graph(o.G);
  const json p = json::parse(text([&](char** s) { return loglim_tau_profile_json(g.get(), cap, s); }));
  if (o.format == "csv") {
    std::string csv = "key,n1,n2,h\n";
    for (const json& e : p["entries"])
      csv += e["key"].get<std::string>() + "," + e["n1"].dump() + "," + e["n2"].dump() + "," +
             e["h"].dump() + "\n";
    return r.emit_csv(csv);
  }
  r.emit_json({{"profile", p["entries"]}});
}

void run_kappa(const Options& o, Runner& r) {
  need_flag(o.G, "--G");
  need_flag(o.G2, "--G2");
  const std::size_t cap = o.cap ? o.cap : 5;
  r.config = {{"G", o.G}, {"G2", o.G2}, {"cap", cap}, {"format", o.format}};
  const Graph a = graph(o.G), b = graph(o.G2);
  double k = 0;
  check(loglim_kappa(a.get(), b.get(), cap, &k));
  r.emit_values({{"kappa", number(k)}});
}

// Returns the exit status: 0, or 3 when the solver stopped on max_sweeps.
int run_maxent(const Options& o, Runner& r) {
  need_flag(o.X, "--X");
  r.config = {{"H", o.H}, {"X", o.X}, {"tol", o.tol}, {"max_sweeps", o.max_sweeps},
              {"cap", o.cap}, {"format", o.format}};
  const Graph h = graph(o.H);
  const Dist x = dist(o.X);
  loglim_maxent_options opt;
  loglim_maxent_options_default(&opt);
  opt.tol = o.tol;
  opt.max_sweeps = o.max_sweeps;
  opt.cell_cap = o.cap;
  loglim_maxent_report rep{};
  const loglim_status st = loglim_maxent(h.get(), x.get(), &opt, &rep);
  if (st != LOGLIM_OK && st != LOGLIM_ERR_NOT_CONVERGED) check(st);
  double lhs = 0, rhs = 0;
  int holds = 0;
  check(loglim_sidorenko_entropy_check(h.get(), x.get(), &lhs, &rhs, &holds));
  r.emit_values({{"m", number(rep.m)},
                 {"d_star", number(rep.d_star)},
                 {"t_star", number(rep.t_star)},
                 {"h_star", number(rep.h_star)},
                 {"residual", number(rep.residual)},
                 {"gibbs_error", number(rep.gibbs_error)},
                 {"iterations", rep.iterations},
                 {"converged", bool(rep.converged)},
                 {"entropy_check_lhs", number(lhs)},
                 {"entropy_check_rhs", number(rhs)},
                 {"entropy_check_holds", bool(holds)}});
  if (st == LOGLIM_ERR_NOT_CONVERGED) {
    std::cerr << "loglim: not-converged: residual " << rep.residual << " after "
              << rep.iterations << " sweeps\n";
    return 3;
  }
  return 0;
}

void run_coset(const Options& o, Runner& r) {
  need_flag(o.group, "--group");
  r.config = {{"group", o.group}, {"t1", o.t1}, {"t2", o.t2}, {"format", o.format}};
  const Triple t = triple(o);
  loglim_graph* raw = nullptr;
  check(loglim_coset_graph(t.t1.get(), t.t2.get(), &raw));
  const Graph g(raw);
  const std::string gj = text([&](char** s) { return loglim_graph_to_json(g.get(), s); });
  if (o.export_graph) {
    // Plain graph file, readable back through --G <path>.
    if (o.out.empty())
      std::cout << gj << "\n";
    else
      std::ofstream(o.out, std::ios::binary) << gj << "\n";
    return;
  }
  json v;
  v["order"] = loglim_group_order(t.g.get());
  v["t1_elements"] = subgroup_json(t.t1.get());
  v["t2_elements"] = subgroup_json(t.t2.get());
  v["n1"] = loglim_graph_n1(g.get());
  v["n2"] = loglim_graph_n2(g.get());
  v["edges"] = loglim_graph_edge_count(g.get());
  int evt = 0;
  if (loglim_graph_n1(g.get()) + loglim_graph_n2(g.get()) <= 64) {
    check(loglim_graph_is_edge_vertex_transitive(g.get(), &evt));
    v["edge_vertex_transitive"] = bool(evt);
  } else {
    v["edge_vertex_transitive"] = nullptr;
  }
  if (o.format == "csv") return r.emit_values(v);
  v["graph"] = json::parse(gj);
  r.emit_json(v);
}

void run_wcount(const Options& o, Runner& r) {
  need_flag(o.group, "--group");
  r.config = {{"H", o.H}, {"group", o.group}, {"t1", o.t1}, {"t2", o.t2}, {"format", o.format}};
  const Triple t = triple(o);
  const Graph h = graph(o.H);
  loglim_graph* raw = nullptr;
  check(loglim_coset_graph(t.t1.get(), t.t2.get(), &raw));
  const Graph g(raw);
  json v;
  v["w"] = text([&](char** s) { return loglim_w_count(h.get(), t.t1.get(), t.t2.get(), s); });
  v["t_via_w"] =
      text([&](char** s) { return loglim_t_via_w(h.get(), t.t1.get(), t.t2.get(), s); });
  v["t_direct"] = text([&](char** s) { return loglim_t_exact(h.get(), g.get(), s); });
  v["equal"] = v["t_via_w"] == v["t_direct"];
  r.emit_values(v);
}

void run_sweep(const Options& o, Runner& r) {
  const std::size_t max_order = o.n.empty() ? 24 : parse_list<std::size_t>(o.n, "order").at(0);
  r.config = {{"max_order", max_order}, {"format", o.format}};
  const std::string csv = text([&](char** s) { return loglim_sidorenko_sweep_csv(max_order, s); });
  if (o.format == "csv") return r.emit_csv(csv);
  json rows = csv_rows(csv);
  std::size_t violations = 0;
  double min_margin = INFINITY;
  for (const json& row : rows) {
    const double m = row["margin"].get<double>();
    if (m < -1e-12 * std::max(1.0, row["bound"].get<double>())) ++violations;
    min_margin = std::min(min_margin, m);
  }
  r.emit_json({{"rows", rows}, {"violations", violations}, {"min_margin", number(min_margin)}});
}

void run_quasirandom(const Options& o, Runner& r) {
  const Graph h = graph(o.H);
  double R = 0;
  char* exact = nullptr;
  check(loglim_quasi_R(h.get(), o.beta.c_str(), o.alpha.c_str(), &exact, &R));
  json v;
  v["R"] = number(R);
  v["R_exact"] = take(exact);
  v["D"] = text([&](char** s) { return loglim_quasi_D(h.get(), o.beta.c_str(), o.alpha.c_str(), s); });
  v["M"] = text([&](char** s) { return loglim_quasi_M(h.get(), o.beta.c_str(), o.alpha.c_str(), s); });
  if (o.r_only) {
    r.config = {{"H", o.H}, {"beta", o.beta}, {"alpha", o.alpha}, {"R_only", true},
                {"format", o.format}};
    return r.emit_values(v);
  }
  const std::vector<std::uint64_t> ns =
      parse_list<std::uint64_t>(o.n.empty() ? "1000,10000" : o.n, "n");
  r.config = {{"H", o.H},           {"beta", o.beta}, {"alpha", o.alpha}, {"n_list", ns},
              {"trials", o.trials}, {"seed", o.seed}, {"format", o.format}};
  const std::string csv = text([&](char** s) {
    return loglim_convergence_csv(h.get(), o.beta.c_str(), o.alpha.c_str(), ns.data(), ns.size(),
                                  o.trials, o.seed, s);
  });
  r.emit_table(csv, v);
}

void run_typegraph(const Options& o, Runner& r) {
  need_flag(o.X, "--X");
  need_flag(o.n, "--n");
  const std::vector<std::size_t> Ns = parse_list<std::size_t>(o.n, "N");
  r.config = {{"H", o.H}, {"X", o.X}, {"N_list", Ns}, {"format", o.format}};
  const Graph h = graph(o.H);
  const Dist x = dist(o.X);
  if (o.export_graph) {
    if (Ns.size() != 1) throw Failure{LOGLIM_ERR_INVALID, "--export needs exactly one N"};
    loglim_graph* raw = nullptr;
    check(loglim_type_graph(x.get(), Ns[0], &raw));
    const Graph g(raw);
    const std::string gj = text([&](char** s) { return loglim_graph_to_json(g.get(), s); });
    if (o.out.empty())
      std::cout << gj << "\n";
    else
      std::ofstream(o.out, std::ios::binary) << gj << "\n";
    return;
  }
  const std::string csv = text([&](char** s) {
    return loglim_main_theorem_csv(x.get(), h.get(), Ns.data(), Ns.size(), s);
  });
  r.emit_table(csv);
}

void run_sparsity(const Options& o, Runner& r) {
  need_flag(o.G, "--G");
  const std::size_t n_max = o.n.empty() ? 20 : parse_list<std::size_t>(o.n, "n").at(0);
  r.config = {{"G", o.G}, {"n_max", n_max}, {"format", o.format}};
  const Graph g = graph(o.G);
  const json rep = json::parse(text([&](char** s) { return loglim_sparsity_json(g.get(), n_max, s); }));
  if (o.format == "csv") {
    std::string csv = "n,g_n,T_n\n";
    for (const auto& [n, gv] : rep["g_values"].items())
      csv += n + "," + gv.dump() + "," + rep["t_values"][n].dump() + "\n";
    return r.emit_csv(csv);
  }
  r.emit_json(rep);
}

void run_export(const Options& o, Runner&) {
  std::string body;
  if (!o.X.empty())
    body = text([&](char** s) { return loglim_dist_to_json(dist(o.X).get(), s); });
  else if (!o.group.empty())
    body = text([&](char** s) { return loglim_group_to_json(group(o.group).get(), s); });
  else
    body = text([&](char** s) { return loglim_graph_to_json(graph(o.G.empty() ? o.H : o.G).get(), s); });
  if (o.out.empty()) {
    std::cout << body << "\n";
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  f << body << "\n";
  if (!f) throw Failure{LOGLIM_ERR_IO, "cannot write '" + o.out + "'"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic subgraph densities, maximum entropy and coset graphs"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };
  auto add_H = [&](CLI::App* sub) {
    sub->add_option("--H", o.H, "Test graph: builtin name or JSON file")->capture_default_str();
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "Group: cyclic:n, dihedral:n, q8, heisenberg:p, ... or JSON");
    sub->add_option("--t1", o.t1, "Generators of T1 as comma-separated element indices");
    sub->add_option("--t2", o.t2, "Generators of T2 as comma-separated element indices");
  };

  struct Command {
    CLI::App* app;
    std::function<int()> run;
  };
  std::vector<Command> subs;
  auto plain = [&](void (*fn)(const Options&, Runner&), const std::string& name) {
    return [fn, name, &o] {
      Runner r(name, o);
      fn(o, r);
      return 0;
    };
  };

  {
    auto* s = app.add_subcommand("density", "t, d and h of H in G");
    add_H(s);
    s->add_option("--G", o.G, "Host graph")->required();
    common(s);
    subs.push_back({s, plain(run_density, "density")});
  }
  {
    auto* s = app.add_subcommand("profile", "h(H,G) over all test graphs up to --cap vertices");
    s->add_option("--G", o.G, "Host graph")->required();
    s->add_option("--cap", o.cap, "Largest test graph size (default 5)");
    common(s);
    subs.push_back({s, plain(run_profile, "profile")});
  }
  {
    auto* s = app.add_subcommand("kappa", "Truncated profile distance between --G and --G2");
    s->add_option("--G", o.G, "First graph")->required();
    s->add_option("--G2", o.G2, "Second graph")->required();
    s->add_option("--cap", o.cap, "Largest test graph size (default 5)");
    common(s);
    subs.push_back({s, plain(run_kappa, "kappa")});
  }
  {
    auto* s = app.add_subcommand("maxent", "Maximum-entropy solution for H with edge marginal X");
    add_H(s);
    s->add_option("--X", o.X, "Distribution: diag<k>, unif<a>x<b>, graph:<spec> or JSON")
        ->required();
    s->add_option("--tol", o.tol, "Residual tolerance")->capture_default_str();
    s->add_option("--max-sweeps", o.max_sweeps, "Sweep limit")->capture_default_str();
    s->add_option("--cap", o.cap, "State-space cell cap (0 = default)");
    common(s);
    subs.push_back({s, [&] {
                      Runner r("maxent", o);
                      return run_maxent(o, r);
                    }});
  }
  {
    auto* s = app.add_subcommand("coset", "Coset graph of (G, T1, T2)");
    add_group(s);
    s->add_option("--G", o.group, "Same as --group");
    s->add_flag("--export", o.export_graph, "Print only the graph file");
    common(s);
    subs.push_back({s, plain(run_coset, "coset")});
  }
  {
    auto* s = app.add_subcommand("wcount", "|W(H,G,T1,T2)| and the density identity");
    add_H(s);
    add_group(s);
    s->add_option("--G", o.group, "Same as --group");
    common(s);
    subs.push_back({s, plain(run_wcount, "wcount")});
  }
  {
    auto* s = app.add_subcommand("sidorenko-sweep",
                                 "t(H) against t(P1)^|E(H)| over the coset-graph catalog");
    s->add_option("--n", o.n, "Largest group order (default 24)");
    common(s);
    subs.push_back({s, plain(run_sweep, "sidorenko-sweep")});
  }
  {
    auto* s = app.add_subcommand("quasirandom", "R(beta, alpha, H) and random-graph convergence");
    add_H(s);
    s->add_option("--beta", o.beta, "beta in (0,1]")->capture_default_str();
    s->add_option("--alpha", o.alpha, "alpha in (0,1)")->capture_default_str();
    s->add_option("--n", o.n, "Comma-separated scales (default 1000,10000)");
    s->add_option("--trials", o.trials, "Trials per scale")->capture_default_str();
    s->add_option("--seed", o.seed, "Base seed")->capture_default_str();
    s->add_flag("--R-only", o.r_only, "Only evaluate the limit functional");
    common(s);
    subs.push_back({s, plain(run_quasirandom, "quasirandom")});
  }
  {
    auto* s = app.add_subcommand("typegraph", "h on type graphs of X against h*(H,X)");
    add_H(s);
    s->add_option("--X", o.X, "Rational distribution")->required();
    s->add_option("--n", o.n, "Comma-separated string lengths N")->required();
    s->add_flag("--export", o.export_graph, "Print only the type graph for a single N");
    common(s);
    subs.push_back({s, plain(run_typegraph, "typegraph")});
  }
  {
    auto* s = app.add_subcommand("sparsity", "beta_v, beta_e, g_n and beta-hat of G");
    s->add_option("--G", o.G, "Graph")->required();
    s->add_option("--n", o.n, "Largest n for g_n (default 20)");
    common(s);
    subs.push_back({s, plain(run_sparsity, "sparsity")});
  }
  {
    auto* s = app.add_subcommand("export", "Write a graph (--H/--G), distribution (--X) or group file");
    add_H(s);
    s->add_option("--G", o.G, "Graph");
    s->add_option("--X", o.X, "Distribution");
    s->add_option("--group", o.group, "Group");
    s->add_option("--out", o.out, "Output file");
    subs.push_back({s, plain(run_export, "export")});
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (const Command& s : subs)
      if (s.app->parsed()) return s.run();
  } catch (const Failure& f) {
    const json err{{"error", loglim_status_name(f.status)}, {"message", f.message}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    const json err{{"error", "internal-error"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 1;
}
