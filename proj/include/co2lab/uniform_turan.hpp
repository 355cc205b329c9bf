#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "co2lab/error.hpp"
#include "co2lab/hypergraph.hpp"
#include "co2lab/measures.hpp"

namespace co2lab {

enum class PairColor : std::uint8_t { red, blue, green };

inline const char* to_string(PairColor c) {
  switch (c) {
    case PairColor::red: return "red";
    case PairColor::blue: return "blue";
    case PairColor::green: return "green";
  }
  return "?";
}

struct ColoredPair {
  Vertex a, b;  // a < b
  PairColor color;
  bool operator==(const ColoredPair&) const = default;
};

// ordering[0] is the least vertex. coloring lists covered pairs in ascending (a, b) order.
struct RgbWitness {
  std::vector<Vertex> ordering;
  std::vector<ColoredPair> coloring;
};

struct RgbConflict {
  Vertex a, b;
  PairColor first, second;
  std::size_t first_edge, second_edge;  // edge indices of the forcing edges
};

inline constexpr int kRgbVertexLimit = 10;

namespace detail {

inline void require_triple_graph(const Hypergraph& h) {
  if (h.k() != 3) throw unsupported_uniformity("ordering property is defined for 3-graphs only");
}

inline std::vector<Vertex> rank_of(const Hypergraph& h, const std::vector<Vertex>& ordering) {
  if (static_cast<int>(ordering.size()) != h.n()) throw input_error("ordering must list every vertex exactly once");
  std::vector<Vertex> rank(static_cast<std::size_t>(h.n()), -1);
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    const Vertex v = ordering[i];
    if (v < 0 || v >= h.n() || rank[static_cast<std::size_t>(v)] >= 0) throw input_error("ordering is not a permutation of the vertex set");
    rank[static_cast<std::size_t>(v)] = static_cast<Vertex>(i);
  }
  return rank;
}

// Colours forced by one edge: (min,mid) red, (min,max) blue, (mid,max) green.
template <class F>
void forced_colors(std::span<const Vertex> e, const std::vector<Vertex>& rank, F&& f) {
  std::array<Vertex, 3> v{e[0], e[1], e[2]};
  std::sort(v.begin(), v.end(), [&](Vertex x, Vertex y) { return rank[static_cast<std::size_t>(x)] < rank[static_cast<std::size_t>(y)]; });
  f(v[0], v[1], PairColor::red);
  f(v[0], v[2], PairColor::blue);
  f(v[1], v[2], PairColor::green);
}

}  // namespace detail

inline std::variant<RgbWitness, RgbConflict> rgb_verify(const Hypergraph& h, const std::vector<Vertex>& ordering) {
  detail::require_triple_graph(h);
  const auto rank = detail::rank_of(h, ordering);
  const std::size_t pairs = static_cast<std::size_t>(h.n()) * static_cast<std::size_t>(std::max(h.n() - 1, 0)) / 2;
  std::vector<int> color(pairs, -1);
  std::vector<std::size_t> source(pairs, 0);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    std::optional<RgbConflict> bad;
    detail::forced_colors(h.edge(i), rank, [&](Vertex x, Vertex y, PairColor c) {
      if (bad) return;
      const Vertex a = std::min(x, y), b = std::max(x, y);
      const auto p = detail::pair_index(a, b);
      if (color[p] < 0) {
        color[p] = static_cast<int>(c);
        source[p] = i;
      } else if (color[p] != static_cast<int>(c)) {
        bad = RgbConflict{a, b, static_cast<PairColor>(color[p]), c, source[p], i};
      }
    });
    if (bad) return *bad;
  }
  RgbWitness w;
  w.ordering = ordering;
  for (Vertex b = 1; b < h.n(); ++b)
    for (Vertex a = 0; a < b; ++a)
      if (color[detail::pair_index(a, b)] >= 0) w.coloring.push_back({a, b, static_cast<PairColor>(color[detail::pair_index(a, b)])});
  return w;
}

struct RgbSearchResult {
  std::optional<RgbWitness> witness;
  std::uint64_t nodes_explored = 0;
  std::uint64_t orderings_covered = 0;  // complete orderings of the non-isolated vertices accounted for
};

// Depth-first over orderings of the non-isolated vertices in lexicographic order; a prefix is cut as
// soon as two edges inside it force different colours on a pair, which no extension can undo.
// The first success is therefore the lexicographically least ordering; isolated vertices go last.
inline RgbSearchResult rgb_witness_search(const Hypergraph& h, int vertex_limit = kRgbVertexLimit) {
  detail::require_triple_graph(h);
  if (h.n() > vertex_limit)
    throw search_refused("ordering search limited to " + std::to_string(vertex_limit) + " vertices; graph has " + std::to_string(h.n()));
  std::vector<Vertex> active, isolated;
  for (Vertex v = 0; v < h.n(); ++v) (h.degree(v) > 0 ? active : isolated).push_back(v);
  const int na = static_cast<int>(active.size());

  RgbSearchResult res;
  std::vector<Vertex> rank(static_cast<std::size_t>(h.n()), -1);
  std::vector<Vertex> prefix;
  const std::size_t pairs = static_cast<std::size_t>(h.n()) * static_cast<std::size_t>(std::max(h.n() - 1, 0)) / 2;
  std::vector<int> color(pairs, -1), refs(pairs, 0);
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(na) + 1, 1);
  for (int i = 1; i <= na; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i) - 1] * static_cast<std::uint64_t>(i);

  // Edges completed by placing v: all vertices ranked.
  auto completed = [&](Vertex v) {
    std::vector<std::size_t> out;
    for (auto ei : h.incident(v)) {
      bool all = true;
      for (Vertex u : h.edge(ei)) all = all && rank[static_cast<std::size_t>(u)] >= 0;
      if (all) out.push_back(ei);
    }
    return out;
  };

  auto dfs = [&](auto&& self, int depth) -> bool {
    ++res.nodes_explored;
    if (depth == na) {
      ++res.orderings_covered;
      return true;
    }
    for (Vertex v : active) {
      if (rank[static_cast<std::size_t>(v)] >= 0) continue;
      rank[static_cast<std::size_t>(v)] = depth;
      prefix.push_back(v);
      std::vector<std::size_t> touched;
      bool ok = true;
      for (auto ei : completed(v)) {
        detail::forced_colors(h.edge(ei), rank, [&](Vertex x, Vertex y, PairColor c) {
          if (!ok) return;
          const auto p = detail::pair_index(std::min(x, y), std::max(x, y));
          if (color[p] < 0) {
            color[p] = static_cast<int>(c);
          } else if (color[p] != static_cast<int>(c)) {
            ok = false;
            return;
          }
          ++refs[p];
          touched.push_back(p);
        });
        if (!ok) break;
      }
      if (ok && self(self, depth + 1)) return true;
      if (!ok) res.orderings_covered += fact[static_cast<std::size_t>(na - depth - 1)];
      for (auto p : touched)
        if (--refs[p] == 0) color[p] = -1;
      prefix.pop_back();
      rank[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };

  if (dfs(dfs, 0)) {
    std::vector<Vertex> ordering = prefix;
    ordering.insert(ordering.end(), isolated.begin(), isolated.end());
    auto v = rgb_verify(h, ordering);
    res.witness = std::get<RgbWitness>(std::move(v));
  }
  return res;
}

// A family has the property iff each member does; each member is searched on its own vertex set.
struct RgbFamilyResult {
  bool all = true;
  std::vector<RgbSearchResult> members;
};

inline RgbFamilyResult rgb_witness_search(const std::vector<Hypergraph>& family, int vertex_limit = kRgbVertexLimit) {
  RgbFamilyResult out;
  for (const auto& h : family) {
    out.members.push_back(rgb_witness_search(h, vertex_limit));
    out.all = out.all && out.members.back().witness.has_value();
  }
  return out;
}

}  // namespace co2lab
