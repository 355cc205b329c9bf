#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "co2lab/co2lab.hpp"

namespace co2lab::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "co2lab/1";

std::string decimal(double x, int digits = 10) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::string rational_text(const Rational& r) { return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()); }

json rational_json(const Rational& r) { return json{{"decimal", decimal(to_double(r))}, {"rational", rational_text(r)}}; }

json edges_json(const Hypergraph& g) {
  json e = json::array();
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    json row = json::array();
    for (Vertex v : g.edge(i)) row.push_back(v);
    e.push_back(std::move(row));
  }
  return e;
}

Hypergraph read_file(const std::string& path, std::istream& in) {
  if (path == "-") return read_hypergraph(in);
  std::ifstream f(path);
  if (!f) throw input_error("cannot open '" + path + "'");
  return read_hypergraph(f);
}

// A file path if one exists, otherwise a registry name.
Hypergraph resolve_graph(const std::string& arg, std::istream& in) {
  if (arg == "-") return read_hypergraph(in);
  std::error_code ec;
  if (std::filesystem::exists(arg, ec)) return read_file(arg, in);
  return named(arg);
}

std::vector<Hypergraph> resolve_family(const std::vector<std::string>& names, std::istream& in) {
  std::vector<Hypergraph> fam;
  for (const auto& n : names) fam.push_back(resolve_graph(n, in));
  return fam;
}

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const auto comma = item.find(',', start);
      const auto tok = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!tok.empty()) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) throw input_error("parameter '" + tok + "' is not key=value");
        p[tok.substr(0, eq)] = tok.substr(eq + 1);
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return p;
}

void print_embedding(std::ostream& out, const Embedding& e) {
  for (std::size_t i = 0; i < e.map.size(); ++i) out << (i ? " " : "") << i << "->" << e.map[i];
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// ---- catalog -------------------------------------------------------------

int cmd_catalog_list(Context& c, bool as_json) {
  const auto graphs = named_catalog();
  const auto& fams = family_catalog();
  if (as_json) {
    json j{{"schema", kSchema}, {"graphs", json::array()}, {"families", json::array()}};
    for (const auto& g : graphs)
      j["graphs"].push_back({{"name", g.name}, {"aliases", g.aliases}, {"signature", g.signature}, {"description", g.description},
                             {"parametric", g.parametric}, {"assumed", g.assumed}, {"assumption", g.assumption}});
    for (const auto& f : fams)
      j["families"].push_back({{"name", f.name}, {"params", f.params}, {"description", f.description}, {"randomized", f.randomized},
                               {"has_generator", f.has_generator}, {"note", f.note}});
    c.out << j.dump(2) << '\n';
    return kOk;
  }
  c.out << "named graphs:\n";
  for (const auto& g : graphs) c.out << "  " << std::left << std::setw(20) << g.signature << ' ' << g.description << (g.assumed ? "  [assumed definition]" : "") << '\n';
  c.out << "construction families:\n";
  for (const auto& f : fams)
    c.out << "  " << std::left << std::setw(26) << f.name << ' ' << f.description << (f.params.empty() ? "" : "  (" + f.params + ")")
          << (f.has_generator ? "" : "  [no generator]") << '\n';
  return kOk;
}

int cmd_catalog_show(Context& c, const std::string& name, bool as_json) {
  for (const auto& f : family_catalog()) {
    if (f.name != name) continue;
    const auto lim = density_limit(name);
    if (as_json) {
      json j{{"schema", kSchema}, {"kind", "family"}, {"name", f.name}, {"params", f.params}, {"description", f.description},
             {"randomized", f.randomized}, {"has_generator", f.has_generator}, {"note", f.note}};
      if (lim) {
        j["density_limit"] = {{"value", decimal(lim->value)}, {"formula", lim->formula}, {"slack", std::to_string(static_cast<int>(lim->slack_constant)) + "/n"}};
        if (lim->exact) j["density_limit"]["rational"] = rational_text(*lim->exact);
      }
      c.out << j.dump(2) << '\n';
    } else {
      c.out << "family " << f.name << '\n' << "  " << f.description << '\n';
      if (!f.params.empty()) c.out << "  params: " << f.params << '\n';
      if (!f.note.empty()) c.out << "  note: " << f.note << '\n';
      if (lim) c.out << "  density limit: " << decimal(lim->value) << (lim->exact ? " (" + rational_text(*lim->exact) + ")" : "") << "  [" << lim->formula << "]\n";
    }
    return kOk;
  }
  const Hypergraph g = named(name);
  const NamedInfo* info = named_info(name);
  if (as_json) {
    json j{{"schema", kSchema}, {"kind", "graph"}, {"name", info ? info->name : name}, {"k", g.k()}, {"n", g.n()}, {"edges", edges_json(g)}, {"co2", co2(g)}};
    if (info) {
      j["description"] = info->description;
      j["assumed"] = info->assumed;
      if (info->assumed) j["assumption"] = info->assumption;
    }
    c.out << j.dump(2) << '\n';
  } else {
    if (info) {
      c.out << "# " << info->name << ": " << info->description << '\n';
      if (info->assumed) c.out << "# assumed definition: " << info->assumption << '\n';
    }
    write_hypergraph(c.out, g);
  }
  return kOk;
}

// ---- gen / measure -------------------------------------------------------

int cmd_gen(Context& c, const std::string& family, int n, std::optional<std::uint64_t> seed, const std::vector<std::string>& params, std::optional<int> t,
            bool as_json) {
  Params p = parse_params(params);
  if (t) p["t"] = std::to_string(*t);
  if (!p.count("seed")) {
    if (seed) p["seed"] = std::to_string(*seed);
    else if (auto s = env_seed()) p["seed"] = std::to_string(*s);
  }
  const bool is_family = std::any_of(family_catalog().begin(), family_catalog().end(), [&](const FamilyInfo& f) { return f.name == family; });
  Hypergraph g = is_family ? construct(family, n, p) : named(family);
  if (as_json) {
    json j{{"schema", kSchema}, {"family", family}, {"k", g.k()}, {"n", g.n()}, {"params", p}, {"rng", std::string(kRngAlgorithm)}, {"edges", edges_json(g)}};
    c.out << j.dump() << '\n';
    return kOk;
  }
  write_hypergraph(c.out, g);
  return kOk;
}

int cmd_measure(Context& c, const std::string& file, std::optional<int> t, bool as_json) {
  const Hypergraph g = read_file(file, c.in);
  const int level = t.value_or(g.k() - 1);
  if (level < 0 || level > g.k()) throw input_error("--t must lie in [0, k]");
  const Count value = co2(g, level);
  std::optional<Count> pos;
  if (g.k() >= 2 && g.n() >= g.k()) pos = positive_min_codegree(g);
  const std::optional<Rational> dens = (g.n() >= g.k() && level == g.k() - 1 && g.n() > g.k() - 1) ? std::optional<Rational>(scaled_co2_density(g)) : std::nullopt;
  const Count mincod = g.n() >= g.k() - 1 ? min_codegree(g) : 0;
  if (as_json) {
    json j{{"schema", kSchema}, {"k", g.k()}, {"n", g.n()}, {"edges", g.num_edges()}, {"t", level}, {"co2", value}, {"min_codegree", mincod}};
    j["positive_min_codegree"] = pos ? json(*pos) : json(nullptr);
    j["scaled_density"] = dens ? rational_json(*dens) : json(nullptr);
    c.out << j.dump(2) << '\n';
    return kOk;
  }
  c.out << "k = " << g.k() << "\nn = " << g.n() << "\nedges = " << g.num_edges() << '\n';
  c.out << (level == g.k() - 1 ? std::string("co2") : "co2 (t = " + std::to_string(level) + ")") << " = " << value << '\n';
  if (dens) c.out << "scaled density = " << decimal(to_double(*dens)) << " (" << rational_text(*dens) << ")\n";
  c.out << "min codegree = " << mincod << '\n';
  c.out << "positive min codegree = " << (pos ? std::to_string(*pos) : std::string("none")) << '\n';
  return kOk;
}

// ---- containment ---------------------------------------------------------

int cmd_check_free(Context& c, const std::string& file, const std::vector<std::string>& forbid, bool induced, bool as_json) {
  const Hypergraph g = read_file(file, c.in);
  const auto fam = resolve_family(forbid, c.in);
  const auto mode = induced ? EmbedMode::induced : EmbedMode::subgraph;
  const auto r = is_free(g, fam, mode);
  if (as_json) {
    json j{{"schema", kSchema}, {"free", r.free}, {"mode", to_string(mode)}, {"forbid", forbid}};
    if (!r.free) {
      j["member"] = forbid[*r.member];
      j["embedding"] = r.witness->map;
    }
    c.out << j.dump(2) << '\n';
  } else if (r.free) {
    c.out << "free\n";
  } else {
    c.out << "contains " << forbid[*r.member] << " (" << to_string(mode) << "): ";
    print_embedding(c.out, *r.witness);
    c.out << '\n';
  }
  return r.free ? kOk : kCheckFailed;
}

int cmd_find_copy(Context& c, const std::string& file, const std::string& pattern, bool induced, bool as_json) {
  const Hypergraph g = read_file(file, c.in);
  const Hypergraph h = resolve_graph(pattern, c.in);
  const auto mode = induced ? EmbedMode::induced : EmbedMode::subgraph;
  const auto e = contains(g, h, mode);
  if (as_json) {
    json j{{"schema", kSchema}, {"found", e.has_value()}, {"mode", to_string(mode)}, {"pattern", pattern}};
    if (e) j["embedding"] = e->map;
    c.out << j.dump(2) << '\n';
  } else if (e) {
    c.out << "found: ";
    print_embedding(c.out, *e);
    c.out << '\n';
  } else {
    c.out << "none\n";
  }
  return e ? kOk : kCheckFailed;
}

// ---- search --------------------------------------------------------------

struct SearchArgs {
  int n = 0;
  int k = 3;
  std::vector<std::string> forbid;
  std::string objective = "co2";
  std::string mode = "subgraph";
  bool bounded = false;
  double time_limit = 60;
  int threads = 1;
  std::size_t cap = 100;
  long long slot_limit = 35;
};

int cmd_search(Context& c, const SearchArgs& a, bool as_json) {
  SearchProblem p;
  p.n = a.n;
  p.k = a.k;
  p.family = resolve_family(a.forbid, c.in);
  if (a.mode == "subgraph") p.mode = EmbedMode::subgraph;
  else if (a.mode == "induced") p.mode = EmbedMode::induced;
  else throw input_error("--mode must be subgraph or induced");
  p.objective = parse_objective(a.objective);
  SearchOptions o;
  o.bounded = a.bounded;
  o.time_limit_s = a.time_limit;
  o.threads = a.threads;
  o.witness_cap = a.cap;
  o.slot_limit = a.slot_limit;
  const auto r = search_extremal(p, o);
  std::vector<Hypergraph> graphs;
  for (const auto& w : r.witnesses) graphs.push_back(from_canonical_form(w));
  if (as_json) {
    json j{{"schema", kSchema}, {"n", p.n}, {"k", p.k}, {"forbid", a.forbid}, {"mode", to_string(p.mode)}, {"objective", to_string(p.objective)},
           {"feasible", r.feasible}, {"optimum", r.optimum}, {"proof_mode", to_string(r.proof_mode)}, {"nodes_explored", r.nodes_explored},
           {"witnesses", r.witnesses}, {"witnesses_truncated", r.witnesses_truncated}, {"notes", r.notes}};
    if (p.objective == Objective::co2 && p.n >= p.k) {
      j["scaled_density"] = rational_json(scaled_density(p.k, p.n, r.optimum));
      j["scaled_density_note"] = "small-n data point only";
    }
    json texts = json::array();
    for (const auto& g : graphs) texts.push_back(to_text(g));
    j["witness_graphs"] = texts;
    c.out << j.dump(2) << '\n';
    return kOk;
  }
  c.out << "# optimum " << to_string(p.objective) << " = " << r.optimum << (r.feasible ? "" : " (infeasible)") << '\n';
  c.out << "# proof_mode = " << to_string(r.proof_mode) << ", nodes_explored = " << r.nodes_explored << '\n';
  c.out << "# witnesses = " << r.witnesses.size() << (r.witnesses_truncated ? " (truncated)" : "") << '\n';
  for (const auto& note : r.notes) c.out << "# note: " << note << '\n';
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    c.out << "# witness " << i + 1 << ": " << r.witnesses[i] << '\n';
    write_hypergraph(c.out, graphs[i]);
  }
  return kOk;
}

// ---- uniform-zero --------------------------------------------------------

int cmd_uniform_zero(Context& c, const std::vector<std::string>& graphs, int limit, bool as_json) {
  json members = json::array();
  bool all = true;
  for (const auto& name : graphs) {
    const Hypergraph h = resolve_graph(name, c.in);
    const auto r = rgb_witness_search(h, limit);
    all = all && r.witness.has_value();
    if (as_json) {
      json m{{"graph", name}, {"nodes_explored", r.nodes_explored}};
      if (r.witness) {
        m["answer"] = "witness";
        m["ordering"] = r.witness->ordering;
        json col = json::array();
        for (const auto& p : r.witness->coloring) col.push_back({{"pair", {p.a, p.b}}, {"color", to_string(p.color)}});
        m["coloring"] = col;
      } else {
        m["answer"] = "none";
        m["checked_orderings"] = r.orderings_covered;
        m["consequence"] = "pi_u >= 1/27";
      }
      members.push_back(std::move(m));
      continue;
    }
    if (graphs.size() > 1) c.out << name << ": ";
    if (r.witness) {
      c.out << "witness; ordering";
      for (Vertex v : r.witness->ordering) c.out << ' ' << v;
      for (PairColor col : {PairColor::red, PairColor::blue, PairColor::green}) {
        c.out << "; " << to_string(col) << ':';
        for (const auto& p : r.witness->coloring)
          if (p.color == col) c.out << ' ' << p.a << p.b;
      }
      c.out << '\n';
    } else {
      c.out << "none; π_u ≥ 1/27 (" << r.orderings_covered << " orderings checked)\n";
    }
  }
  if (as_json) {
    json j{{"schema", kSchema}, {"answer", all ? "witness" : "none"}};
    if (graphs.size() == 1) {
      for (auto& [key, val] : members[0].items()) j[key] = val;
    } else {
      j["members"] = members;
    }
    c.out << j.dump(2) << '\n';
  } else if (graphs.size() > 1) {
    c.out << "family: " << (all ? "every member has a witness" : "some member has no witness") << '\n';
  }
  return kOk;
}

// ---- table1 --------------------------------------------------------------

int cmd_table1(Context& c, const std::vector<std::string>& ids, int nmax, bool csv, bool as_json) {
  const auto rows = table1(ids, nmax);
  const bool all = std::all_of(rows.begin(), rows.end(), [](const Table1Row& r) { return r.pass; });
  auto value_text = [](const Table1Spec& s) { return s.value_exact ? rational_text(*s.value_exact) : decimal(s.value, 5); };
  if (as_json) {
    json j{{"schema", kSchema}, {"upper_bound_source", kUpperBoundLabel}, {"pass", all}, {"rows", json::array()}};
    for (const auto& r : rows) {
      json pts = json::array();
      for (const auto& p : r.points)
        pts.push_back({{"n", p.n}, {"edges", p.edges}, {"co2", p.co2}, {"scaled_density", rational_json(p.density)}, {"deviation", decimal(p.deviation)},
                       {"allowed", decimal(p.allowed)}, {"pass", p.pass}});
      j["rows"].push_back({{"id", r.spec.id}, {"target", r.spec.target}, {"construction", r.spec.family}, {"params", r.spec.params},
                           {"lower_bound", value_text(r.spec)}, {"slack", r.spec.slack.describe()}, {"points", pts}, {"pass", r.pass},
                           {"upper_bound", r.spec.upper}, {"note", r.note}});
    }
    c.out << j.dump(2) << '\n';
  } else if (csv) {
    c.out << "id,target,construction,n,edges,co2,scaled_density,rational,lower_bound,deviation,allowed,pass,upper_bound\n";
    for (const auto& r : rows)
      for (const auto& p : r.points)
        c.out << r.spec.id << ",\"" << r.spec.target << "\"," << r.spec.family << ',' << p.n << ',' << p.edges << ',' << p.co2 << ',' << decimal(to_double(p.density))
              << ',' << rational_text(p.density) << ',' << value_text(r.spec) << ',' << decimal(p.deviation) << ',' << decimal(p.allowed) << ','
              << (p.pass ? "pass" : "FAIL") << ',' << r.spec.upper << '\n';
  } else {
    c.out << "lower bounds recomputed from constructions; upper bounds: " << kUpperBoundLabel << '\n';
    for (const auto& r : rows) {
      c.out << std::left << std::setw(9) << r.spec.id << std::setw(28) << r.spec.target << std::setw(26) << r.spec.family << "lower " << std::setw(8)
            << value_text(r.spec) << " upper " << std::setw(11) << r.spec.upper << (r.pass ? "pass" : "FAIL") << '\n';
      for (const auto& p : r.points)
        c.out << "    n = " << std::setw(5) << p.n << " density " << decimal(to_double(p.density), 6) << "  |dev| " << decimal(p.deviation, 6) << " <= "
              << decimal(p.allowed, 6) << "  " << (p.pass ? "ok" : "out of slack") << '\n';
      if (!r.note.empty()) c.out << "    note: " << r.note << '\n';
    }
  }
  return all ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"codegree-squared extremal hypergraph toolkit", "co2lab"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "structured output");

  auto* catalog = app.add_subcommand("catalog", "list or show registry entries");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "list named graphs and construction families");
  auto* cat_show = catalog->add_subcommand("show", "show one registry entry");
  std::string show_name;
  cat_show->add_option("name", show_name)->required();
  for (auto* s : {catalog, cat_list, cat_show}) s->add_flag("--json", as_json);

  auto* gen = app.add_subcommand("gen", "generate a construction or named graph in the text format");
  std::string gen_family;
  int gen_n = -1;
  std::optional<std::uint64_t> gen_seed;
  std::optional<int> gen_t;
  std::vector<std::string> gen_params;
  gen->add_option("family", gen_family)->required();
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--seed", gen_seed, "seed for randomized families (default: CO2LAB_SEED)");
  gen->add_option("--t", gen_t, "blow-up factor");
  gen->add_option("--params,--param", gen_params, "key=value[,key=value...]");
  gen->add_flag("--json", as_json);

  auto* measure = app.add_subcommand("measure", "codegree measures of a graph file ('-' for stdin)");
  std::string measure_file;
  std::optional<int> measure_t;
  measure->add_option("file", measure_file)->required();
  measure->add_option("--t", measure_t, "codegree level (default k-1)");
  measure->add_flag("--json", as_json);

  auto* check = app.add_subcommand("check-free", "exit 0 if the graph avoids every listed pattern, 1 otherwise");
  std::string check_file;
  std::vector<std::string> check_forbid;
  bool check_induced = false;
  check->add_option("file", check_file)->required();
  check->add_option("--forbid", check_forbid, "pattern names or files")->required();
  check->add_flag("--induced", check_induced);
  check->add_flag("--json", as_json);

  auto* find = app.add_subcommand("find-copy", "exit 0 and print an embedding if the pattern occurs, 1 otherwise");
  std::string find_file, find_pattern;
  bool find_induced = false;
  find->add_option("file", find_file)->required();
  find->add_option("pattern", find_pattern)->required();
  find->add_flag("--induced", find_induced);
  find->add_flag("--json", as_json);

  auto* search = app.add_subcommand("search", "exact extremal search over small n");
  SearchArgs sa;
  search->add_option("--n", sa.n)->required();
  search->add_option("--k", sa.k);
  search->add_option("--forbid", sa.forbid, "pattern names or files (omit for the empty family)");
  search->add_option("--objective", sa.objective, "l1 | co2 | min_codegree | positive_min_codegree");
  search->add_option("--mode", sa.mode, "subgraph | induced");
  search->add_flag("--bounded", sa.bounded, "allow over-limit instances; best found within the time limit");
  search->add_option("--time-limit", sa.time_limit, "seconds (bounded mode)");
  search->add_option("--threads", sa.threads);
  search->add_option("--witness-cap", sa.cap);
  search->add_option("--slot-limit", sa.slot_limit, "edge slots allowed in exhaustive mode");
  search->add_flag("--json", as_json);

  auto* uz = app.add_subcommand("uniform-zero", "decide the red/blue/green ordering property");
  std::vector<std::string> uz_graphs;
  int uz_limit = kRgbVertexLimit;
  uz->add_option("graphs", uz_graphs, "names or files; several are treated as a family")->required();
  uz->add_option("--limit", uz_limit, "vertex limit");
  uz->add_flag("--json", as_json);

  auto* t1 = app.add_subcommand("table1", "recompute construction lower bounds for the density table");
  std::vector<std::string> t1_rows;
  int t1_nmax = 0;
  bool t1_csv = false;
  t1->add_option("--rows", t1_rows, "row ids (default all)")->delimiter(',');
  t1->add_option("--nmax", t1_nmax, "skip n above this");
  t1->add_flag("--csv", t1_csv);
  t1->add_flag("--json", as_json);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) err << sub->help();
    return kUsage;
  }

  try {
    if (*cat_list) return cmd_catalog_list(ctx, as_json);
    if (*cat_show) return cmd_catalog_show(ctx, show_name, as_json);
    if (*gen) return cmd_gen(ctx, gen_family, gen_n, gen_seed, gen_params, gen_t, as_json);
    if (*measure) return cmd_measure(ctx, measure_file, measure_t, as_json);
    if (*check) return cmd_check_free(ctx, check_file, check_forbid, check_induced, as_json);
    if (*find) return cmd_find_copy(ctx, find_file, find_pattern, find_induced, as_json);
    if (*search) return cmd_search(ctx, sa, as_json);
    if (*uz) return cmd_uniform_zero(ctx, uz_graphs, uz_limit, as_json);
    if (*t1) return cmd_table1(ctx, t1_rows, t1_nmax, t1_csv, as_json);
  } catch (const parse_error& e) {
    err << "parse error at " << e.what() << '\n';
    return kUsage;
  } catch (const search_refused& e) {
    err << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace co2lab::cli
