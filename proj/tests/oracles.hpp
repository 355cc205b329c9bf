#pragma once

// Slow, obviously-correct reference implementations used to cross-check the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "co2lab/co2lab.hpp"

namespace oracle {

using co2lab::Count;
using co2lab::Hypergraph;
using co2lab::Vertex;

inline std::vector<std::vector<Vertex>> subsets(int n, int r) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, Vertex from) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::set<std::vector<Vertex>> edge_set(const Hypergraph& g) {
  std::set<std::vector<Vertex>> s;
  for (const auto& e : g.edge_list()) s.insert(e);
  return s;
}

inline bool is_sub(const std::vector<Vertex>& small, const std::vector<Vertex>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Codegree of a sorted vertex set by scanning every edge.
inline Count codegree(const Hypergraph& g, const std::vector<Vertex>& t) {
  Count c = 0;
  for (const auto& e : g.edge_list()) c += is_sub(t, e);
  return c;
}

inline Count co2(const Hypergraph& g) {
  Count s = 0;
  for (const auto& t : subsets(g.n(), g.k() - 1)) {
    const Count d = codegree(g, t);
    s += d * d;
  }
  return s;
}

inline Count min_codegree(const Hypergraph& g) {
  Count m = -1;
  for (const auto& t : subsets(g.n(), g.k() - 1)) {
    const Count d = codegree(g, t);
    if (m < 0 || d < m) m = d;
  }
  return std::max<Count>(m, 0);
}

inline Count positive_min_codegree(const Hypergraph& g) {
  Count m = 0;
  for (const auto& t : subsets(g.n(), g.k() - 1)) {
    const Count d = codegree(g, t);
    if (d > 0 && (m == 0 || d < m)) m = d;
  }
  return m;
}

inline Count objective(const Hypergraph& g, co2lab::Objective o) {
  switch (o) {
    case co2lab::Objective::l1: return static_cast<Count>(g.num_edges());
    case co2lab::Objective::co2: return oracle::co2(g);
    case co2lab::Objective::min_codegree: return oracle::min_codegree(g);
    case co2lab::Objective::positive_min_codegree: return oracle::positive_min_codegree(g);
  }
  return 0;
}

// Image of every pattern edge (and, in induced mode, non-edge) checked directly.
inline bool map_ok(const Hypergraph& host, const Hypergraph& pat, const std::vector<Vertex>& map, bool induced) {
  const auto he = edge_set(host);
  for (const auto& s : subsets(pat.n(), pat.k())) {
    const bool pe = pat.has_edge(s);
    if (!pe && !induced) continue;
    std::vector<Vertex> img;
    for (Vertex v : s) img.push_back(map[static_cast<std::size_t>(v)]);
    std::sort(img.begin(), img.end());
    if (static_cast<bool>(he.count(img)) != pe) return false;
  }
  return true;
}

// Tries every injective map.
inline bool contains(const Hypergraph& host, const Hypergraph& pat, bool induced) {
  if (pat.n() > host.n()) return false;
  std::vector<Vertex> map;
  std::vector<char> used(static_cast<std::size_t>(host.n()), 0);
  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(map.size()) == pat.n()) return map_ok(host, pat, map, induced);
    for (Vertex h = 0; h < host.n(); ++h) {
      if (used[static_cast<std::size_t>(h)]) continue;
      used[static_cast<std::size_t>(h)] = 1;
      map.push_back(h);
      const bool ok = self(self);
      map.pop_back();
      used[static_cast<std::size_t>(h)] = 0;
      if (ok) return true;
    }
    return false;
  };
  return rec(rec);
}

inline bool is_free(const Hypergraph& host, const std::vector<Hypergraph>& fam, bool induced) {
  for (const auto& f : fam)
    if (contains(host, f, induced)) return false;
  return true;
}

// Least sorted relabelled edge list over all n! permutations.
inline std::vector<std::vector<Vertex>> canon(const Hypergraph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Vertex>> best;
  bool first = true;
  const auto edges = g.edge_list();
  do {
    std::vector<std::vector<Vertex>> cur;
    for (const auto& e : edges) {
      std::vector<Vertex> f;
      for (Vertex v : e) f.push_back(perm[static_cast<std::size_t>(v)]);
      std::sort(f.begin(), f.end());
      cur.push_back(f);
    }
    std::sort(cur.begin(), cur.end());
    if (first || cur < best) best = cur;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct Enumeration {
  Count optimum = -1;
  std::set<std::vector<std::vector<Vertex>>> optimal_classes;  // by canon()
};

// Every edge subset on n labelled vertices, no pruning.
inline Enumeration enumerate(int n, int k, const std::vector<Hypergraph>& fam, bool induced, co2lab::Objective obj) {
  const auto slots = subsets(n, k);
  Enumeration out;
  std::map<Count, std::vector<Hypergraph>> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) edges.push_back(slots[s]);
    Hypergraph g(k, n, edges);
    const Count v = objective(g, obj);
    if (v < out.optimum) continue;
    if (!is_free(g, fam, induced)) continue;
    if (v > out.optimum) {
      out.optimum = v;
      out.optimal_classes.clear();
    }
    out.optimal_classes.insert(canon(g));
  }
  return out;
}

// Direct role tabulation for one ordering: true iff no pair gets two colours.
inline bool rgb_ok(const Hypergraph& h, const std::vector<Vertex>& order) {
  std::vector<int> pos(static_cast<std::size_t>(h.n()));
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::map<std::pair<Vertex, Vertex>, int> color;
  for (const auto& e : h.edge_list()) {
    std::vector<Vertex> v = e;
    std::sort(v.begin(), v.end(), [&](Vertex a, Vertex b) { return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]; });
    const std::pair<std::pair<Vertex, Vertex>, int> roles[3] = {{{v[0], v[1]}, 0}, {{v[0], v[2]}, 1}, {{v[1], v[2]}, 2}};
    for (auto [p, c] : roles) {
      auto key = std::minmax(p.first, p.second);
      auto [it, fresh] = color.emplace(std::pair<Vertex, Vertex>(key.first, key.second), c);
      if (!fresh && it->second != c) return false;
    }
  }
  return true;
}

// First ordering (lexicographic over all n! permutations) that works.
inline std::optional<std::vector<Vertex>> rgb_any(const Hypergraph& h) {
  std::vector<Vertex> order(static_cast<std::size_t>(h.n()));
  std::iota(order.begin(), order.end(), 0);
  do
    if (rgb_ok(h, order)) return order;
  while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

inline std::vector<Vertex> random_perm(int n, co2lab::Rng& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

}  // namespace oracle
