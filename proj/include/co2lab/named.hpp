#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "co2lab/combinatorics.hpp"
#include "co2lab/error.hpp"
#include "co2lab/hypergraph.hpp"

namespace co2lab {

// Catalog entry for a named small graph. Parametric entries take integer arguments,
// written name(a,b) or name:a,b.
struct NamedInfo {
  std::string name;
  std::vector<std::string> aliases;
  std::string signature;  // e.g. "loose_path(s)"; equals name for fixed graphs
  std::string description;
  bool parametric = false;
  // Set when the edge list is a standard definition adopted without a primary source edge list.
  bool assumed = false;
  std::string assumption;
};

namespace detail {

struct FixedGraph {
  NamedInfo info;
  int k, n;
  std::vector<std::vector<Vertex>> edges;
};

inline std::vector<std::vector<Vertex>> all_subsets(int n, int r) {
  std::vector<std::vector<Vertex>> out;
  for_each_subset(n, r, [&](std::span<const Vertex> s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

inline std::vector<std::vector<Vertex>> all_but(int n, int r, std::vector<std::vector<Vertex>> removed) {
  for (auto& e : removed) std::sort(e.begin(), e.end());
  auto all = all_subsets(n, r);
  std::erase_if(all, [&](const std::vector<Vertex>& e) { return std::find(removed.begin(), removed.end(), e) != removed.end(); });
  return all;
}

inline std::vector<std::vector<Vertex>> f33_edges() {
  std::vector<std::vector<Vertex>> e{{0, 1, 2}};
  for (Vertex i = 0; i < 3; ++i)
    for (Vertex a = 3; a < 6; ++a)
      for (Vertex b = a + 1; b < 6; ++b) e.push_back({i, a, b});
  return e;
}

inline std::vector<std::vector<Vertex>> j_edges(int t) {
  std::vector<std::vector<Vertex>> e;
  for (Vertex a = 1; a <= t; ++a)
    for (Vertex b = a + 1; b <= t; ++b) e.push_back({0, a, b});
  return e;
}

inline const std::vector<std::vector<Vertex>>& fano_edges() {
  static const std::vector<std::vector<Vertex>> e{{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {1, 3, 5}, {0, 3, 6}, {1, 4, 6}, {2, 5, 6}};
  return e;
}

inline const std::vector<FixedGraph>& fixed_graphs() {
  static const std::vector<FixedGraph> g = [] {
    std::vector<FixedGraph> v;
    auto add = [&](std::string name, std::vector<std::string> aliases, std::string desc, int k, int n, std::vector<std::vector<Vertex>> edges,
                   std::string assumption = {}) {
      NamedInfo info{name, std::move(aliases), name, std::move(desc), false, !assumption.empty(), std::move(assumption)};
      v.push_back({std::move(info), k, n, std::move(edges)});
    };
    add("F5", {"F_5"}, "5 vertices, edges 012, 013, 234", 3, 5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
    add("F3_2", {"F32", "F_3_2"}, "edges 012, 034, 134, 234", 3, 5, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}, {2, 3, 4}});
    add("F3_3", {"F33", "F_3_3"}, "classes {0,1,2}, {3,4,5}: edge 012 plus every triple with one vertex in the first class and two in the second",
        3, 6, f33_edges(),
        "standard definition: edge 012 plus all triples {i,a,b}, i in {0,1,2}, a,b in {3,4,5} (10 edges)");
    add("Fano", {"fano"}, "Fano plane; every pair lies in exactly one edge", 3, 7, fano_edges());
    add("fano_complement", {}, "the 28 triples of K7 that are not Fano lines", 3, 7, all_but(7, 3, fano_edges()));
    add("S6", {"h6_six"}, "6-vertex 3-graph with 10 edges in which every pair has codegree 2", 3, 6,
        {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}, {0, 2, 5}, {1, 3, 5}, {2, 4, 5}, {1, 4, 5}, {0, 3, 5}});
    add("H7", {}, "7-vertex 3-graph with 14 edges", 3, 7,
        {{0, 1, 3}, {0, 2, 6}, {0, 4, 5}, {1, 2, 4}, {1, 5, 6}, {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {0, 1, 5}, {1, 3, 4}, {0, 4, 6}, {0, 2, 3}, {1, 2, 6}});
    add("C5_tight", {"C5"}, "tight 5-cycle: consecutive triples of 0..4 cyclically", 3, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}});
    add("C5_minus", {"C5-"}, "tight 5-cycle minus the edge 014", 3, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}});
    add("K4_3_minus", {"K4-", "K4_minus"}, "three edges on four vertices", 3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    add("K5_eq", {"K5="}, "K5 minus two edges meeting in one vertex", 3, 5, all_but(5, 3, {{0, 1, 2}, {0, 3, 4}}));
    add("K5_lt", {"K5<"}, "K5 minus two edges meeting in two vertices", 3, 5, all_but(5, 3, {{0, 1, 2}, {0, 1, 3}}));
    add("K5_minus", {"K5-"}, "K5 minus one edge (9 edges)", 3, 5, all_but(5, 3, {{0, 1, 2}}));
    add("K5_4_eq", {"K5_4="}, "three 4-edges on five vertices", 4, 5, {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}});
    add("K5_4_minus", {"K5_4-"}, "four 4-edges on five vertices", 4, 5, all_but(5, 4, {{1, 2, 3, 4}}));
    add("E5_4", {}, "one 4-edge on five vertices", 4, 5, {{0, 1, 2, 3}});
    add("E4_3", {}, "one 3-edge on four vertices", 3, 4, {{0, 1, 2}});
    add("J4", {}, "apex 0 joined to every pair of {1,2,3,4}", 3, 5, j_edges(4),
        "standard definition: edges {0,a,b} for all pairs a,b of {1,2,3,4}");
    add("J5", {}, "apex 0 joined to every pair of {1,...,5}", 3, 6, j_edges(5),
        "standard definition: edges {0,a,b} for all pairs a,b of {1,...,5}");
    add("C3_3", {"C3"}, "loose triangle: edges 012, 234, 450", 3, 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
    add("M2_3", {"M2"}, "two disjoint edges", 3, 6, {{0, 1, 2}, {3, 4, 5}});
    return v;
  }();
  return g;
}

struct ParsedName {
  std::string base;
  std::vector<int> args;
};

inline ParsedName split_name(std::string_view s) {
  ParsedName p;
  std::string_view rest;
  if (auto open = s.find('('); open != std::string_view::npos) {
    if (s.back() != ')') throw registry_error("malformed parametric name '" + std::string(s) + "'");
    p.base = std::string(s.substr(0, open));
    rest = s.substr(open + 1, s.size() - open - 2);
  } else if (auto colon = s.find(':'); colon != std::string_view::npos) {
    p.base = std::string(s.substr(0, colon));
    rest = s.substr(colon + 1);
  } else {
    p.base = std::string(s);
    return p;
  }
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    auto tok = rest.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw registry_error("bad parameter '" + std::string(tok) + "' in '" + std::string(s) + "'");
    p.args.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return p;
}

// Kt_k, e.g. K4_3, K5_4.
inline bool parse_clique(std::string_view s, int& t, int& k) {
  if (s.size() < 4 || s[0] != 'K') return false;
  const auto us = s.find('_');
  if (us == std::string_view::npos) return false;
  auto a = s.substr(1, us - 1), b = s.substr(us + 1);
  auto r1 = std::from_chars(a.data(), a.data() + a.size(), t);
  auto r2 = std::from_chars(b.data(), b.data() + b.size(), k);
  return r1.ec == std::errc() && r1.ptr == a.data() + a.size() && r2.ec == std::errc() && r2.ptr == b.data() + b.size();
}

inline void need_args(const ParsedName& p, std::size_t count) {
  if (p.args.size() != count)
    throw registry_error(p.base + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(p.args.size()));
}

inline Hypergraph make_clique(int t, int k) {
  if (k < 1 || t < k) throw input_error("clique K_t^k needs t >= k >= 1");
  if (binomial(t, k) > (Count{1} << 24)) throw input_error("clique too large");
  return Hypergraph(k, t, all_subsets(t, k));
}

}  // namespace detail

inline Hypergraph loose_path(int s) {
  if (s < 1) throw input_error("loose_path needs s >= 1");
  std::vector<std::vector<Vertex>> e;
  for (int i = 0; i < s; ++i) e.push_back({2 * i, 2 * i + 1, 2 * i + 2});
  return Hypergraph(3, 2 * s + 1, e);
}

inline Hypergraph loose_cycle(int s) {
  if (s < 3) throw input_error("loose_cycle needs s >= 3");
  std::vector<std::vector<Vertex>> e;
  for (int i = 0; i < s; ++i) e.push_back({2 * i, 2 * i + 1, (2 * i + 2) % (2 * s)});
  return Hypergraph(3, 2 * s, e);
}

inline Hypergraph matching(int s, int k = 3) {
  if (s < 0 || k < 1) throw input_error("matching needs s >= 0, k >= 1");
  std::vector<std::vector<Vertex>> e;
  for (int i = 0; i < s; ++i) {
    std::vector<Vertex> ed;
    for (int j = 0; j < k; ++j) ed.push_back(k * i + j);
    e.push_back(ed);
  }
  return Hypergraph(k, k * s, e);
}

// s edges pairwise meeting exactly in the centre 0.
inline Hypergraph star(int s) {
  if (s < 1) throw input_error("star needs s >= 1");
  std::vector<std::vector<Vertex>> e;
  for (int i = 0; i < s; ++i) e.push_back({0, 2 * i + 1, 2 * i + 2});
  return Hypergraph(3, 2 * s + 1, e);
}

inline Hypergraph clique(int t, int k) { return detail::make_clique(t, k); }

// J_t: apex 0 joined to all pairs of {1..t}.
inline Hypergraph daisy_j(int t) {
  if (t < 2) throw input_error("J_t needs t >= 2");
  return Hypergraph(3, t + 1, detail::j_edges(t));
}

// (2k)-graph on parts A = 0..k-1, B = k..2k-1, C = 2k..3k-1 with edges A+B, B+C, A+C.
inline Hypergraph big_triangle(int k) {
  if (k < 1) throw input_error("big_triangle needs k >= 1");
  std::vector<Vertex> a, b, c;
  for (int i = 0; i < k; ++i) {
    a.push_back(i);
    b.push_back(k + i);
    c.push_back(2 * k + i);
  }
  auto join = [](std::vector<Vertex> x, const std::vector<Vertex>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  return Hypergraph(2 * k, 3 * k, {join(a, b), join(b, c), join(a, c)});
}

inline std::vector<NamedInfo> named_catalog() {
  std::vector<NamedInfo> out;
  for (const auto& f : detail::fixed_graphs()) out.push_back(f.info);
  auto param = [&](std::string name, std::string sig, std::string desc) {
    out.push_back(NamedInfo{std::move(name), {}, std::move(sig), std::move(desc), true, false, {}});
  };
  param("loose_path", "loose_path(s)", "s edges, consecutive edges share one vertex");
  param("loose_cycle", "loose_cycle(s)", "s >= 3 edges in a cycle, consecutive edges share one vertex");
  param("matching", "matching(s)", "s disjoint 3-edges");
  param("star", "star(s)", "s 3-edges pairwise meeting only in vertex 0");
  param("K", "K<t>_<k> or K(t,k)", "complete k-graph on t vertices");
  param("J", "J(t)", "apex 0 joined to every pair of a t-set");
  param("T2k", "T2k(k)", "big triangle: 2k-graph on three k-sets with the three pairwise unions as edges");
  return out;
}

// Looks up a fixed name or alias, a clique Kt_k, or a parametric name with arguments.
inline Hypergraph named(std::string_view name) {
  for (const auto& f : detail::fixed_graphs()) {
    if (f.info.name == name || std::find(f.info.aliases.begin(), f.info.aliases.end(), name) != f.info.aliases.end())
      return Hypergraph(f.k, f.n, f.edges);
  }
  int t = 0, k = 0;
  if (detail::parse_clique(name, t, k)) return detail::make_clique(t, k);
  const auto p = detail::split_name(name);
  if (p.base == "loose_path") return detail::need_args(p, 1), loose_path(p.args[0]);
  if (p.base == "loose_cycle") return detail::need_args(p, 1), loose_cycle(p.args[0]);
  if (p.base == "matching") return detail::need_args(p, 1), matching(p.args[0]);
  if (p.base == "star") return detail::need_args(p, 1), star(p.args[0]);
  if (p.base == "K") return detail::need_args(p, 2), detail::make_clique(p.args[0], p.args[1]);
  if (p.base == "J") return detail::need_args(p, 1), daisy_j(p.args[0]);
  if (p.base == "T2k" || p.base == "big_triangle") return detail::need_args(p, 1), big_triangle(p.args[0]);
  throw registry_error("unknown graph name '" + std::string(name) + "'");
}

// Registry metadata for a fixed name or alias; nullptr when absent.
inline const NamedInfo* named_info(std::string_view name) {
  for (const auto& f : detail::fixed_graphs())
    if (f.info.name == name || std::find(f.info.aliases.begin(), f.info.aliases.end(), name) != f.info.aliases.end()) return &f.info;
  return nullptr;
}

}  // namespace co2lab
