#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "co2lab/combinatorics.hpp"
#include "co2lab/error.hpp"
#include "co2lab/hypergraph.hpp"
#include "co2lab/measures.hpp"
#include "co2lab/random.hpp"

namespace co2lab {

using EdgeSink = std::function<void(std::span<const Vertex>)>;

// A generated graph that can be built, or streamed edge by edge without storing it.
// emit() yields every edge once, vertices ascending.
struct Construction {
  std::string family;
  int k = 3;
  int n = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::string layout;
  std::function<void(const EdgeSink&)> emit;

  Hypergraph build() const {
    HypergraphBuilder b(k, n);
    emit([&](std::span<const Vertex> e) { b.add(e); });
    return std::move(b).build();
  }
  Count co2() const {
    return co2_streamed(k, n, [&](const auto& sink) { emit(EdgeSink(sink)); });
  }
  Count num_edges() const {
    Count m = 0;
    emit([&](std::span<const Vertex>) { ++m; });
    return m;
  }
};

namespace detail {

inline void require_n(int n, int min_n, const char* family) {
  if (n < min_n) throw input_error(std::string(family) + " needs n >= " + std::to_string(min_n));
}

// part index of each vertex for consecutive blocks of the given sizes
inline std::vector<int> part_labels(const std::vector<int>& sizes) {
  std::vector<int> p;
  for (std::size_t i = 0; i < sizes.size(); ++i) p.insert(p.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
  return p;
}

inline std::string sizes_text(const std::vector<int>& sizes) {
  std::string s;
  Vertex start = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) s += ", ";
    s += "P" + std::to_string(i) + " = [" + std::to_string(start) + "," + std::to_string(start + sizes[i]) + ")";
    start += sizes[i];
  }
  return s;
}

template <class Pred>
void emit_triples(int n, Pred&& pred, const EdgeSink& sink) {
  std::array<Vertex, 3> e{};
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (pred(a, b, c)) {
          e = {a, b, c};
          sink(e);
        }
}

// Keevash-Mubayi style rule: a triple is a non-edge iff it lies in one part, or it has two
// vertices in part i and one in part j for an arc (i, j).
inline std::function<void(const EdgeSink&)> digraph_rule(int n, std::vector<int> sizes, std::vector<std::pair<int, int>> arcs) {
  const auto r = sizes.size();
  std::vector<char> arc(r * r, 0);
  for (auto [i, j] : arcs) arc[static_cast<std::size_t>(i) * r + static_cast<std::size_t>(j)] = 1;
  auto lab = part_labels(sizes);
  return [n, lab = std::move(lab), arc = std::move(arc), r](const EdgeSink& sink) {
    emit_triples(
        n,
        [&](Vertex a, Vertex b, Vertex c) {
          const int pa = lab[static_cast<std::size_t>(a)], pb = lab[static_cast<std::size_t>(b)], pc = lab[static_cast<std::size_t>(c)];
          if (pa == pb && pb == pc) return false;
          int two = -1, one = -1;
          if (pa == pb) two = pa, one = pc;
          else if (pa == pc) two = pa, one = pb;
          else if (pb == pc) two = pb, one = pa;
          else return true;
          return !arc[static_cast<std::size_t>(two) * r + static_cast<std::size_t>(one)];
        },
        sink);
  };
}

inline std::vector<std::vector<Vertex>> base_edges(const Hypergraph& h) { return h.edge_list(); }

// Transversal edges of a blow-up with consecutive classes starting at lo.
inline void emit_blowup_layer(const std::vector<std::vector<Vertex>>& edges, int k, const std::vector<Vertex>& starts,
                              const std::vector<int>& sizes, const EdgeSink& sink) {
  std::vector<Vertex> cur(static_cast<std::size_t>(k));
  std::vector<Vertex> sorted(static_cast<std::size_t>(k));
  for (const auto& e : edges) {
    bool empty_class = false;
    for (Vertex x : e)
      if (sizes[static_cast<std::size_t>(x)] == 0) empty_class = true;
    if (empty_class) continue;
    std::function<void(int)> rec = [&](int pos) {
      if (pos == k) {
        sorted = cur;
        std::sort(sorted.begin(), sorted.end());
        sink(sorted);
        return;
      }
      const Vertex x = e[static_cast<std::size_t>(pos)];
      for (int j = 0; j < sizes[static_cast<std::size_t>(x)]; ++j) {
        cur[static_cast<std::size_t>(pos)] = starts[static_cast<std::size_t>(x)] + j;
        rec(pos + 1);
      }
    };
    rec(0);
  }
}

inline void emit_iterated(const std::vector<std::vector<Vertex>>& edges, int k, int v, Vertex lo, int size, const EdgeSink& sink) {
  if (size < k) return;
  const auto sizes = balanced_sizes(size, v);
  std::vector<Vertex> starts(static_cast<std::size_t>(v));
  Vertex s = lo;
  for (int i = 0; i < v; ++i) {
    starts[static_cast<std::size_t>(i)] = s;
    s += sizes[static_cast<std::size_t>(i)];
  }
  emit_blowup_layer(edges, k, starts, sizes, sink);
  for (int i = 0; i < v; ++i) emit_iterated(edges, k, v, starts[static_cast<std::size_t>(i)], sizes[static_cast<std::size_t>(i)], sink);
}

}  // namespace detail

namespace families {

// Complete 3-partite; parts floor(n/3), floor((n+1)/3), floor((n+2)/3) as consecutive ranges.
inline Construction s_n(int n) {
  detail::require_n(n, 0, "s_n");
  const std::vector<int> sizes{n / 3, (n + 1) / 3, (n + 2) / 3};
  auto lab = detail::part_labels(sizes);
  Construction c{"s_n", 3, n, {}, detail::sizes_text(sizes), {}};
  c.emit = [n, lab](const EdgeSink& sink) {
    detail::emit_triples(
        n, [&](Vertex a, Vertex b, Vertex d) { return lab[a] != lab[b] && lab[b] != lab[d] && lab[a] != lab[d]; }, sink);
  };
  return c;
}

// Complete bipartite 3-graph: all triples meeting both parts; first part ceil(n/2).
inline Construction b_n(int n) {
  detail::require_n(n, 0, "b_n");
  const auto sizes = balanced_sizes(n, 2);
  auto lab = detail::part_labels(sizes);
  Construction c{"b_n", 3, n, {}, detail::sizes_text(sizes), {}};
  c.emit = [n, lab](const EdgeSink& sink) {
    detail::emit_triples(
        n, [&](Vertex a, Vertex b, Vertex d) { return !(lab[a] == lab[b] && lab[b] == lab[d]); }, sink);
  };
  return c;
}

// Part sizes and arcs of a Keevash-Mubayi style construction: a triple is a non-edge iff it lies
// inside one part, or it has two vertices in part i and one in part j for an arc (i, j).
struct DigraphLayout {
  std::vector<int> sizes;
  std::vector<std::pair<int, int>> arcs;
};

inline DigraphLayout layout_c_n(int n) { return {balanced_sizes(n, 3), {{0, 2}, {1, 0}, {2, 1}}}; }
inline DigraphLayout layout_h5(int n) { return {balanced_sizes(n, 4), {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}; }
inline DigraphLayout layout_h6_five_part(int n) { return {balanced_sizes(n, 5), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}}; }

inline constexpr double kG6DefaultA = 0.412498;

// A = first round(a n) vertices, then balanced B1, B2, B3 carrying the c_n pattern.
inline DigraphLayout layout_g6(int n, double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw input_error("g6 class fraction a must lie in [0, 1]");
  const int asz = static_cast<int>(std::lround(a * n));
  const auto bs = balanced_sizes(n - asz, 3);
  return {{asz, bs[0], bs[1], bs[2]}, {{1, 3}, {2, 1}, {3, 2}}};
}

// Transversal triples plus {2 in P0, 1 in P1}, {2 in P1, 1 in P2}, {2 in P2, 1 in P0}.
inline Construction c_n(int n) {
  detail::require_n(n, 0, "c_n");
  auto l = layout_c_n(n);
  Construction c{"c_n", 3, n, {}, detail::sizes_text(l.sizes), {}};
  c.emit = detail::digraph_rule(n, l.sizes, l.arcs);
  return c;
}

// Four balanced parts; non-edge iff inside a part or two in P_j and one in P_{j+1 mod 4}.
inline Construction h5(int n) {
  detail::require_n(n, 0, "h5");
  auto l = layout_h5(n);
  Construction c{"h5", 3, n, {}, detail::sizes_text(l.sizes), {}};
  c.emit = detail::digraph_rule(n, l.sizes, l.arcs);
  return c;
}

// Five balanced parts; non-edge iff inside a part or two in P_j and one in P_{j+1 mod 5}.
inline Construction h6_five_part(int n) {
  detail::require_n(n, 0, "h6_five_part");
  auto l = layout_h6_five_part(n);
  Construction c{"h6_five_part", 3, n, {}, detail::sizes_text(l.sizes), {}};
  c.emit = detail::digraph_rule(n, l.sizes, l.arcs);
  return c;
}

// c_n pattern on B1, B2, B3 plus every triple meeting A in one or two vertices.
inline Construction g6(int n, double a = kG6DefaultA) {
  detail::require_n(n, 0, "g6");
  auto l = layout_g6(n, a);
  Construction c{"g6", 3, n, {{"a", std::to_string(a)}}, "A = P0; " + detail::sizes_text(l.sizes), {}};
  c.emit = detail::digraph_rule(n, l.sizes, l.arcs);
  return c;
}

// Vertex x of the base becomes x*t .. x*t+t-1.
inline Construction blowup(const Hypergraph& base, int t, std::string base_name = "custom") {
  if (t < 0) throw input_error("blow-up factor must be nonnegative");
  const int v = base.n();
  Construction c{"blowup", base.k(), v * t, {{"base", base_name}, {"t", std::to_string(t)}},
                 "vertex x -> [x*t, x*t+t)", {}};
  auto edges = base.edge_list();
  const int k = base.k();
  c.emit = [edges, k, v, t](const EdgeSink& sink) {
    std::vector<Vertex> starts(static_cast<std::size_t>(v));
    for (int x = 0; x < v; ++x) starts[static_cast<std::size_t>(x)] = x * t;
    detail::emit_blowup_layer(edges, k, starts, std::vector<int>(static_cast<std::size_t>(v), t), sink);
  };
  return c;
}

// Balanced blow-up of base on n vertices, repeated inside every class while it has >= k vertices.
inline Construction iterated_blowup(const Hypergraph& base, int n, std::string base_name = "custom") {
  detail::require_n(n, 0, "iterated_blowup");
  if (base.n() < 2) throw input_error("iterated blow-up needs a base with at least 2 vertices");
  Construction c{"iterated_blowup", base.k(), n, {{"base", base_name}},
                 "balanced classes (remainder to earliest), recursing inside each class", {}};
  auto edges = base.edge_list();
  const int k = base.k(), v = base.n();
  c.emit = [edges, k, v, n](const EdgeSink& sink) { detail::emit_iterated(edges, k, v, 0, n, sink); };
  return c;
}

// All triples meeting X = {0..s-2}.
inline Construction g_star(int n, int s) {
  if (s < 2) throw input_error("g_star needs s >= 2");
  detail::require_n(n, s - 1, "g_star");
  Construction c{"g_star", 3, n, {{"s", std::to_string(s)}}, "X = [0," + std::to_string(s - 1) + ")", {}};
  c.emit = [n, s](const EdgeSink& sink) { detail::emit_triples(n, [&](Vertex a, Vertex, Vertex) { return a < s - 1; }, sink); };
  return c;
}

// All triples through vertex 0.
inline Construction star_vertex(int n) {
  detail::require_n(n, 1, "star_vertex");
  Construction c{"star_vertex", 3, n, {}, "centre 0", {}};
  c.emit = [n](const EdgeSink& sink) { detail::emit_triples(n, [](Vertex a, Vertex, Vertex) { return a == 0; }, sink); };
  return c;
}

// A = [0,s), B = [s,2s), C = rest; edges meet one of A, B in >= 2 vertices and miss the other.
inline Construction f_o(int n, int s) {
  if (s < 1) throw input_error("f_o needs s >= 1");
  detail::require_n(n, 2 * s, "f_o");
  Construction c{"f_o", 3, n, {{"s", std::to_string(s)}}, detail::sizes_text({s, s, n - 2 * s}), {}};
  c.emit = [n, s](const EdgeSink& sink) {
    detail::emit_triples(
        n,
        [&](Vertex a, Vertex b, Vertex d) {
          int ca = 0, cb = 0;
          for (Vertex x : {a, b, d}) {
            if (x < s) ++ca;
            else if (x < 2 * s) ++cb;
          }
          return (ca >= 2 && cb == 0) || (cb >= 2 && ca == 0);
        },
        sink);
  };
  return c;
}

// Auxiliary graph on x_1..x_{s-1} = [0,s-1), y_1..y_{s-1} = [s-1,2s-2), z = 2s-2:
// x_i y_j (i != j); x_i y_i for 2i <= s; x_i z, y_i z for 2i > s.
// Edges: triples meeting V(G) in exactly an edge of G, triples inside V(G) containing two
// edges of G, and x_1 y_i z.
inline Construction f_e(int n, int s) {
  if (s < 2) throw input_error("f_e needs s >= 2");
  detail::require_n(n, 2 * s - 1, "f_e");
  const int g = 2 * s - 1;
  const Vertex z = 2 * s - 2;
  std::vector<char> adj(static_cast<std::size_t>(g * g), 0);
  auto link = [&](Vertex u, Vertex v) { adj[static_cast<std::size_t>(u * g + v)] = adj[static_cast<std::size_t>(v * g + u)] = 1; };
  auto x = [](int i) { return static_cast<Vertex>(i - 1); };
  auto y = [s](int i) { return static_cast<Vertex>(s - 2 + i); };
  for (int i = 1; i < s; ++i)
    for (int j = 1; j < s; ++j) {
      if (i != j) link(x(i), y(j));
      else if (2 * i <= s) link(x(i), y(i));
    }
  for (int i = 1; i < s; ++i)
    if (2 * i > s) {
      link(x(i), z);
      link(y(i), z);
    }
  Construction c{"f_e", 3, n, {{"s", std::to_string(s)}},
                 "x_i = i-1, y_i = s-2+i (1 <= i < s), z = 2s-2, rest outside the auxiliary graph", {}};
  c.emit = [n, g, adj, z, x, y, s](const EdgeSink& sink) {
    auto e = [&](Vertex u, Vertex v) { return u < g && v < g && adj[static_cast<std::size_t>(u * g + v)]; };
    detail::emit_triples(
        n,
        [&](Vertex a, Vertex b, Vertex d) {
          const int inside = (a < g) + (b < g) + (d < g);
          if (inside == 2) return e(a, b);  // the two inside vertices come first
          if (inside == 3) {
            const int cnt = e(a, b) + e(a, d) + e(b, d);
            if (cnt >= 2) return true;
            if (a == x(1) && d == z && b >= y(1) && b <= y(s - 1)) return true;
          }
          return false;
        },
        sink);
  };
  return c;
}

// V1 = first v1 vertices (default ceil(sqrt(1/2) n)), V2 = rest; edges: two in V1, one in V2.
inline Construction f32_bipartite(int n, int v1 = -1) {
  detail::require_n(n, 0, "f32_bipartite");
  if (v1 < 0) v1 = static_cast<int>(std::ceil(std::sqrt(0.5) * n));
  if (v1 > n) throw input_error("f32_bipartite: |V1| exceeds n");
  Construction c{"f32_bipartite", 3, n, {{"v1", std::to_string(v1)}}, detail::sizes_text({v1, n - v1}), {}};
  c.emit = [n, v1](const EdgeSink& sink) {
    detail::emit_triples(n, [&](Vertex, Vertex b, Vertex d) { return b < v1 && d >= v1; }, sink);
  };
  return c;
}

// P = first round(b m) vertices of the current block, S = rest; edges: two in P, one in S;
// repeated inside S.
inline Construction c5_iterated(int n, double b = 0.7) {
  detail::require_n(n, 0, "c5_iterated");
  if (!(b > 0.0 && b < 1.0)) throw input_error("c5_iterated needs 0 < b < 1");
  Construction c{"c5_iterated", 3, n, {{"b", std::to_string(b)}},
                 "pair class P = first round(b m) vertices of each block of size m, recursion inside the remainder", {}};
  c.emit = [n, b](const EdgeSink& sink) {
    std::vector<int> level(static_cast<std::size_t>(n), 0);   // depth of the block a vertex leaves at
    std::vector<char> in_p(static_cast<std::size_t>(n), 0);
    Vertex lo = 0;
    int depth = 0;
    while (n - lo >= 3) {
      const int m = n - lo;
      int p = static_cast<int>(std::lround(b * m));
      p = std::clamp(p, 1, m - 1);
      for (Vertex v = lo; v < lo + p; ++v) {
        in_p[static_cast<std::size_t>(v)] = 1;
        level[static_cast<std::size_t>(v)] = depth;
      }
      lo += p;
      ++depth;
    }
    for (Vertex v = lo; v < n; ++v) level[static_cast<std::size_t>(v)] = depth;
    // Triple {a<b<d} is an edge of block t iff a, b are in P_t and d lies beyond P_t.
    detail::emit_triples(
        n,
        [&](Vertex a, Vertex bb, Vertex d) {
          const int t = level[static_cast<std::size_t>(a)];
          return in_p[static_cast<std::size_t>(a)] && in_p[static_cast<std::size_t>(bb)] && level[static_cast<std::size_t>(bb)] == t &&
                 level[static_cast<std::size_t>(d)] > t;
        },
        sink);
  };
  return c;
}

namespace detail_t {
// o[pair_index(i,j)] = 1 iff i -> j for i < j.
inline std::vector<char> random_tournament(int n, std::uint64_t seed) {
  Rng rng(seed, 0x7A11);
  std::vector<char> o(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2 + 1, 0);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) o[detail::pair_index(i, j)] = rng.coin();
  return o;
}
}  // namespace detail_t

// Random tournament T; ijk (i<j<k) is an edge iff (i,j) and (i,k) are oppositely directed.
inline Construction tournament_gt(int n, std::uint64_t seed) {
  detail::require_n(n, 0, "tournament_gt");
  Construction c{"tournament_gt", 3, n, {{"seed", std::to_string(seed)}, {"rng", std::string(kRngAlgorithm)}}, "tournament on 0..n-1", {}};
  auto o = detail_t::random_tournament(n, seed);
  c.emit = [n, o](const EdgeSink& sink) {
    detail::emit_triples(n, [&](Vertex a, Vertex b, Vertex d) { return o[detail::pair_index(a, b)] != o[detail::pair_index(a, d)]; }, sink);
  };
  return c;
}

// Random tournament T; edges are the cyclically oriented triangles.
inline Construction tournament_ct(int n, std::uint64_t seed) {
  detail::require_n(n, 0, "tournament_ct");
  Construction c{"tournament_ct", 3, n, {{"seed", std::to_string(seed)}, {"rng", std::string(kRngAlgorithm)}}, "tournament on 0..n-1", {}};
  auto o = detail_t::random_tournament(n, seed);
  c.emit = [n, o](const EdgeSink& sink) {
    detail::emit_triples(
        n,
        [&](Vertex a, Vertex b, Vertex d) {
          const char ab = o[detail::pair_index(a, b)], bd = o[detail::pair_index(b, d)], ad = o[detail::pair_index(a, d)];
          return ab == bd && ad != ab;
        },
        sink);
  };
  return c;
}

// Random s-colouring c of pairs; ijk (i<j<k) is an edge iff c(ij) != c(ik).
inline Construction falgas_ravry(int n, int s, std::uint64_t seed) {
  detail::require_n(n, 0, "falgas_ravry");
  if (s < 1) throw input_error("falgas_ravry needs s >= 1 colours");
  Rng rng(seed, 0xC010);
  std::vector<int> col(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2 + 1, 0);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) col[detail::pair_index(i, j)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(s)));
  Construction c{"falgas_ravry", 3, n, {{"s", std::to_string(s)}, {"seed", std::to_string(seed)}, {"rng", std::string(kRngAlgorithm)}},
                 "pair colouring of 0..n-1", {}};
  c.emit = [n, col](const EdgeSink& sink) {
    detail::emit_triples(n, [&](Vertex a, Vertex b, Vertex d) { return col[detail::pair_index(a, b)] != col[detail::pair_index(a, d)]; }, sink);
  };
  return c;
}

// Rows [0, n/2), columns [n/2, n), random 0/1 matrix M. 4-sets with three rows or three
// columns, or two rows and two columns whose 2x2 submatrix has odd sum.
inline Construction giraud(int n, std::uint64_t seed) {
  if (n < 0 || n % 2 != 0) throw input_error("giraud needs even n >= 0");
  const int h = n / 2;
  Rng rng(seed, 0x61AD);
  std::vector<char> m(static_cast<std::size_t>(h * h), 0);
  for (auto& x : m) x = rng.coin();
  Construction c{"giraud", 4, n, {{"seed", std::to_string(seed)}, {"rng", std::string(kRngAlgorithm)}},
                 "rows [0," + std::to_string(h) + "), columns [" + std::to_string(h) + "," + std::to_string(n) + ")", {}};
  c.emit = [n, h, m](const EdgeSink& sink) {
    for_each_subset(n, 4, [&](std::span<const Vertex> e) {
      int rows = 0;
      for (Vertex v : e) rows += v < h;
      if (rows == 3 || rows == 1) {
        sink(e);
      } else if (rows == 2) {
        const int r0 = e[0], r1 = e[1], c0 = e[2] - h, c1 = e[3] - h;
        const int sum = m[static_cast<std::size_t>(r0 * h + c0)] + m[static_cast<std::size_t>(r0 * h + c1)] +
                        m[static_cast<std::size_t>(r1 * h + c0)] + m[static_cast<std::size_t>(r1 * h + c1)];
        if (sum % 2 == 1) sink(e);
      }
    });
  };
  return c;
}

// 2k-graph on two parts (first ceil(n/2)); edges meet each part in an odd number of vertices.
inline Construction parity_triangle(int n, int k) {
  if (k < 1) throw input_error("parity_triangle needs k >= 1");
  detail::require_n(n, 0, "parity_triangle");
  const auto sizes = balanced_sizes(n, 2);
  Construction c{"parity_triangle", 2 * k, n, {{"k", std::to_string(k)}}, detail::sizes_text(sizes), {}};
  const int a = sizes[0];
  c.emit = [n, k, a](const EdgeSink& sink) {
    for_each_subset(n, 2 * k, [&](std::span<const Vertex> e) {
      int in_a = 0;
      for (Vertex v : e) in_a += v < a;
      if (in_a % 2 == 1) sink(e);  // 2k - in_a is then odd as well
    });
  };
  return c;
}

}  // namespace families
}  // namespace co2lab
