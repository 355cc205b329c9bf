// One PASS/FAIL line per acceptance criterion; detail lines are indented below it.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "co2lab/co2lab.hpp"
#include "oracles.hpp"

using namespace co2lab;

namespace {

struct Report {
  bool ok = true;
  std::ostringstream detail;

  void check(bool cond, const std::string& what) {
    if (!cond) ok = false;
    detail << "    [" << (cond ? "ok" : "FAIL") << "] " << what << '\n';
  }
  void info(const std::string& what) { detail << "    [info] " << what << '\n'; }
};

std::string fmt(double x, int prec = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, x);
  return buf;
}

using Clock = std::chrono::steady_clock;
double secs(Clock::time_point a) { return std::chrono::duration<double>(Clock::now() - a).count(); }

// ---- 1 ---------------------------------------------------------------------

void formulas(Report& r) {
  int bad = 0;
  for (int n = 3; n <= 60; ++n) {
    const Count a = n / 3, b = (n + 1) / 3, c = (n + 2) / 3;
    bad += co2(construct("s_n", n)) != a * b * c * n;
  }
  r.check(bad == 0, "co2(S_n) = |A||B||C| n for n in [3,60]");

  bad = 0;
  for (int n = 4; n <= 60; ++n) bad += co2(construct("star_vertex", n)) != binomial(n - 1, 2) * (2 * n - 3);
  r.check(bad == 0, "star through a vertex: co2 = C(n-1,2)(2n-3) for n in [4,60]");

  bad = 0;
  int cases = 0;
  for (const char* fam : {"g_star", "f_o"})
    for (int s : {2, 3, 4, 5})
      for (int n : {12, 20, 30}) {
        const Params p{{"s", std::to_string(s)}};
        const auto cf = closed_form(fam, n, Measure::co2, p);
        ++cases;
        bad += !cf || !cf->exact || cf->value != co2(construct(fam, n, p));
      }
  r.check(bad == 0, "G(n;3,s-1) and F_o closed forms vs direct co2 (" + std::to_string(cases) + " cases)");

  bad = 0;
  for (int n : {6, 12, 18, 24}) {
    const Count v = co2(construct("blowup", n, {{"base", "S6"}}));
    bad += v * 108 != 5 * Count{n} * n * n * n;
  }
  r.check(bad == 0, "blow-up of S6: co2 = 5 n^4 / 108 at n = 6, 12, 18, 24");
}

// ---- 2 ---------------------------------------------------------------------

void identities(Report& r) {
  Rng rng(20240601);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 3 + static_cast<int>(rng.below(10));
    const auto g = random_hypergraph(3, n, 1 + rng.below(7), 8, rng);
    Count s = 0;
    for (Count w : edge_weights(g)) s += w;
    bad += s != co2(g);
  }
  r.check(bad == 0, "co2 = sum of edge weights on 1000 random 3-graphs (n <= 12)");

  int bad_q = 0, bad_corrected = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + static_cast<int>(rng.below(9));
    const auto g = random_hypergraph(3, n, 1 + rng.below(7), 8, rng);
    const auto x = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    const Count dec = co2(g) - co2(delete_vertex(g, x));
    bad_q += dec != q_degree(g, x);
    bad_corrected += dec != q_degree(g, x) - g.degree(x);
  }
  r.check(bad_q == 0, "co2 decrement on deleting x equals q_degree(x): " + std::to_string(200 - bad_q) + "/200 agree");
  r.info("decrement equals q_degree(x) - deg(x) on " + std::to_string(200 - bad_corrected) + "/200 pairs");

  bad = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 4 + static_cast<int>(rng.below(7));
    const auto g = random_hypergraph(4, n, 1 + rng.below(7), 8, rng);
    bad += boundary_pair_count(g) != 4 * Count{n - 3} * static_cast<Count>(g.num_edges()) - co2(g);
  }
  r.check(bad == 0, "4-graph boundary pairs N = 4(n-3)|E| - co2 on 500 random 4-graphs (n <= 10)");

  bad = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 3 + static_cast<int>(rng.below(10));
    const auto g = random_hypergraph(3, n, 1 + rng.below(7), 8, rng);
    const auto m = static_cast<Count>(g.num_edges());
    const auto sh = static_cast<Count>(shadow(g).num_edges());
    for (Count d : {1, 2, 3}) bad += static_cast<Count>(full_subgraph(g, d).num_edges()) < m - d * sh;
  }
  r.check(bad == 0, "|E(full_subgraph(G,d))| >= |E(G)| - d |shadow| on 500 random 3-graphs, d = 1, 2, 3");
}

// ---- 3 ---------------------------------------------------------------------

SearchProblem problem(int n, std::vector<std::string> fam, Objective o) {
  SearchProblem p;
  p.n = n;
  p.objective = o;
  for (const auto& f : fam) p.family.push_back(named(f));
  return p;
}

void extremal(Report& r) {
  for (int n : {6, 7}) {
    const auto t0 = Clock::now();
    const auto res = search_extremal(problem(n, {"C3_3"}, Objective::co2));
    const double dt = secs(t0);
    const Count want = binomial(n - 1, 2) * (2 * n - 3);
    r.check(res.optimum == want && res.proof_mode == ProofMode::exhaustive,
            "exco2(" + std::to_string(n) + ", {C3_3}) = " + std::to_string(res.optimum) + " (expected " + std::to_string(want) + ")");
    r.check(dt < (n == 6 ? 10.0 : 600.0), "n = " + std::to_string(n) + " runtime " + fmt(dt, 2) + " s");
  }

  int agree = 0, total = 0;
  for (auto obj : {Objective::l1, Objective::co2, Objective::min_codegree, Objective::positive_min_codegree})
    for (const std::vector<std::string>& fam : {std::vector<std::string>{}, {"K4_3"}, {"C3_3"}, {"M2_3"}}) {
      const auto p = problem(5, fam, obj);
      const auto res = search_extremal(p);
      SearchOptions plain;
      plain.prune_bound = false;
      plain.prune_canonical = false;
      plain.witness_cap = 1u << 20;
      const auto unpruned = search_extremal(p, plain);
      const auto brute = oracle::enumerate(5, 3, p.family, false, obj);
      std::set<std::vector<std::vector<Vertex>>> cls;
      for (const auto& w : res.witnesses) cls.insert(oracle::canon(from_canonical_form(w)));
      ++total;
      agree += res.optimum == brute.optimum && unpruned.optimum == brute.optimum && !res.witnesses_truncated && cls == brute.optimal_classes;
    }
  r.check(agree == total, "pruned search agrees with unpruned and brute-force enumeration at n = 5: " + std::to_string(agree) + "/" +
                              std::to_string(total));
}

// ---- 4 ---------------------------------------------------------------------

void freeness(Report& r) {
  auto all_free = [](const std::string& fam, const std::vector<int>& ns, const Params& p, const std::vector<std::string>& forbid) {
    std::vector<Hypergraph> f;
    for (const auto& s : forbid) f.push_back(named(s));
    for (int n : ns)
      if (!is_free(construct(fam, n, p), f).free) return false;
    return true;
  };
  auto range = [](int a, int b, int step = 1) {
    std::vector<int> v;
    for (int i = a; i <= b; i += step) v.push_back(i);
    return v;
  };
  r.check(all_free("c_n", range(1, 30), {}, {"K4_3"}), "C_n (n <= 30) is K4-free");
  r.check(all_free("s_n", range(1, 30), {}, {"F5"}), "S_n (n <= 30) is F5-free");
  r.check(all_free("s_n", range(1, 30), {}, {"K4_3_minus", "F3_2", "C5_tight"}), "S_n (n <= 30) is {K4-, F3_2, C5}-free");
  r.check(all_free("b_n", range(1, 20), {}, {"K5_3"}), "B_n (n <= 20) is K5-free");
  r.check(all_free("b_n", range(1, 20), {}, {"F3_3"}), "B_n (n <= 20) is F3_3-free (assumed 10-edge F3_3)");
  r.check(all_free("blowup", range(6, 24, 6), {{"base", "S6"}}, {"K4_3_minus"}), "S6 blow-up (t <= 4) is K4- free");
  r.check(all_free("blowup", range(4, 20, 4), {{"base", "K4_3"}}, {"F3_2", "J4"}), "K4 blow-up (t <= 5) is {F3_2, J4}-free (assumed J4)");
  bool ok = true;
  for (int seed : {1, 2, 3}) ok = ok && all_free("giraud", {8}, {{"seed", std::to_string(seed)}}, {"K5_4"});
  r.check(ok, "giraud(n = 8), 3 seeds, is K5^4-free");
  ok = true;
  for (int seed = 1; seed <= 5; ++seed) ok = ok && all_free("tournament_ct", {12}, {{"seed", std::to_string(seed)}}, {"K4_3_minus"});
  r.check(ok, "cyclic-triangle tournament graph (n = 12), 5 seeds, is K4- free");
  ok = true;
  for (int seed = 1; seed <= 5; ++seed) ok = ok && all_free("tournament_gt", {12}, {{"seed", std::to_string(seed)}}, {"K4_3"});
  r.check(ok, "G_T tournament graph (n = 12), 5 seeds, is K4-free");
}

// ---- 5 ---------------------------------------------------------------------

void uniform(Report& r) {
  for (const char* n : {"F5", "F3_2", "C5_minus", "Fano"}) {
    const auto s = rgb_witness_search(named(n));
    r.check(s.witness && oracle::rgb_ok(named(n), s.witness->ordering), std::string(n) + ": witness ordering found");
  }
  for (const char* n : {"C5_tight", "K4_3_minus", "K4_3"}) r.check(!rgb_witness_search(named(n)).witness, std::string(n) + ": no witness");

  int agree = 0, total = 0;
  for (const auto& info : named_catalog()) {
    if (info.parametric) continue;
    const auto g = named(info.name);
    if (g.k() != 3 || g.n() > 7) continue;
    ++total;
    agree += rgb_witness_search(g).witness.has_value() == oracle::rgb_any(g).has_value();
  }
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    const int n = 3 + static_cast<int>(rng.below(5));
    const auto g = random_hypergraph(3, n, 1 + rng.below(4), 8, rng);
    ++total;
    agree += rgb_witness_search(g).witness.has_value() == oracle::rgb_any(g).has_value();
  }
  r.check(agree == total, "pruned search vs all orderings at |V| <= 7: " + std::to_string(agree) + "/" + std::to_string(total));
}

// ---- 6 ---------------------------------------------------------------------

void densities(Report& r) {
  struct Row {
    const char* fam;
    Params p;
    Rational target;
  };
  const std::vector<Row> rows = {{"c_n", {}, Rational(1, 3)},
                                 {"b_n", {}, Rational(5, 8)},
                                 {"blowup", {{"base", "S6"}}, Rational(5, 54)},
                                 {"s_n", {}, Rational(2, 27)},
                                 {"f32_bipartite", {}, Rational(1, 4)}};
  for (const auto& row : rows) {
    bool ok = true;
    std::string pts;
    for (int n : {60, 120, 240}) {
      const auto c = construction(row.fam, n, row.p);
      const double d = to_double(scaled_density(3, n, c.co2()));
      const double dev = std::abs(d - to_double(row.target));
      ok = ok && dev <= 10.0 / n;
      pts += " n=" + std::to_string(n) + ":" + fmt(d);
    }
    std::ostringstream t;
    t << row.target;
    r.check(ok, std::string(row.fam) + (row.p.empty() ? "" : "(" + row.p.begin()->second + ")") + " -> " + t.str() + " within 10/n;" + pts);
  }

  const double it = to_double(scaled_density(3, 216, construction("iterated_s6", 216).co2()));
  r.check(std::abs(it - 4.0 / 43) <= 0.02, "iterated S6 blow-up at n = 216: " + fmt(it) + " vs 4/43 = " + fmt(4.0 / 43) + " (abs 0.02)");

  for (int n : {400, 800}) {
    const double g = to_double(scaled_density(3, n, construction("g6", n, {{"a", "0.4125"}}).co2()));
    r.check(std::abs(g - 0.7348) <= 0.01 * 0.7348, "G6(a = 0.4125) at n = " + std::to_string(n) + ": " + fmt(g) + " vs 0.7348 (1%)");
  }

  const int n = 24;
  const auto pt = construct("parity_triangle", n, {{"k", "2"}});
  const Count s = co2(pt, 2);
  const double want = 0.25 * std::pow(static_cast<double>(binomial(n, 2)), 3);
  r.check(std::abs(static_cast<double>(s) - want) <= 0.15 * want,
          "parity big triangle (k = 2, n = 24): sum d(A)^2 = " + std::to_string(s) + " vs C(n,2)^3/4 = " + fmt(want, 0) + " (ratio " +
              fmt(static_cast<double>(s) / want, 4) + ", 15% allowed)");
}

// ---- 7 ---------------------------------------------------------------------

void positive(Report& r) {
  int bad = 0;
  for (int n = 3; n <= 60; ++n) bad += positive_min_codegree(construct("s_n", n)).value_or(-1) != n / 3;
  r.check(bad == 0, "positive_min_codegree(S_n) = floor(n/3) for n in [3,60]");

  for (int n : {5, 6}) {
    const auto p = problem(n, {"K4_3_minus"}, Objective::positive_min_codegree);
    const auto res = search_extremal(p);
    bool verified = res.proof_mode == ProofMode::exhaustive && !res.witnesses.empty();
    for (const auto& w : res.witnesses) verified = verified && verify_witness(from_canonical_form(w), p, res.optimum);
    const auto sform = canonical_form(construct("s_n", n));
    bool tripartite = false;
    for (const auto& w : res.witnesses) tripartite = tripartite || w == sform;
    r.check(verified, "co+ex(" + std::to_string(n) + ", {K4-}) = " + std::to_string(res.optimum) + ", " + std::to_string(res.witnesses.size()) +
                          " witness class(es), exhaustive and verified");
    r.info("n = " + std::to_string(n) + ": S_n " + (tripartite ? "is" : "is not") + " among the optimal witnesses (S_n attains " +
           std::to_string(n / 3) + ")");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Report&)>>> criteria = {
      {"exact formula suite", formulas},   {"identity suite", identities},        {"exact extremal search", extremal},
      {"freeness suite", freeness},        {"uniform-Turan concordance", uniform}, {"density convergence", densities},
      {"positive codegree", positive},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Report rep;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(rep);
    } catch (const std::exception& e) {
      rep.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (rep.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " (" << fmt(secs(t0), 2) << " s)\n"
              << rep.detail.str() << std::flush;
    failed += !rep.ok;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criterion(s) failed") << '\n';
  return failed == 0 ? 0 : 1;
}
