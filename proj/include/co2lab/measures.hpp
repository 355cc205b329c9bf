#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "co2lab/combinatorics.hpp"
#include "co2lab/error.hpp"
#include "co2lab/hypergraph.hpp"

namespace co2lab {

using Rational = boost::rational<Count>;

namespace detail {

inline void require_vertex(const Hypergraph& g, Vertex v) {
  if (v < 0 || v >= g.n()) throw input_error("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(g.n()));
}

inline void require_k(const Hypergraph& g, int k, const char* op) {
  if (g.k() != k)
    throw unsupported_uniformity(std::string(op) + " needs a " + std::to_string(k) + "-graph, got k = " + std::to_string(g.k()));
}

inline std::vector<Vertex> sorted_subset(const Hypergraph& g, std::span<const Vertex> t) {
  std::vector<Vertex> s(t.begin(), t.end());
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    require_vertex(g, s[i]);
    if (i > 0 && s[i] == s[i - 1]) throw input_error("repeated vertex " + std::to_string(s[i]));
  }
  return s;
}

inline bool contains_sorted(std::span<const Vertex> edge, std::span<const Vertex> sub) {
  return std::includes(edge.begin(), edge.end(), sub.begin(), sub.end());
}

inline constexpr Count kDenseSubsetLimit = Count{1} << 28;

// Index of the unordered pair {a, b}.
inline std::size_t pair_index(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(b) * static_cast<std::size_t>(b - 1) / 2 + static_cast<std::size_t>(a);
}

}  // namespace detail

// d(T): number of edges containing T.
inline Count codegree(const Hypergraph& g, std::span<const Vertex> t) {
  const auto s = detail::sorted_subset(g, t);
  if (static_cast<int>(s.size()) > g.k()) throw input_error("subset larger than the uniformity");
  if (s.empty()) return static_cast<Count>(g.num_edges());
  Vertex pivot = s[0];
  for (Vertex v : s)
    if (g.degree(v) < g.degree(pivot)) pivot = v;
  Count c = 0;
  for (auto e : g.incident(pivot))
    if (detail::contains_sorted(g.edge(e), s)) ++c;
  return c;
}
inline Count codegree(const Hypergraph& g, std::initializer_list<Vertex> t) {
  return codegree(g, std::span<const Vertex>(t.begin(), t.size()));
}

// Codegrees of every t-subset, indexed by colex rank.
class CodegreeVector {
 public:
  CodegreeVector(int n, int t, std::vector<Count> entries) : n_(n), t_(t), binom_(n, t), d_(std::move(entries)) {}

  int t() const noexcept { return t_; }
  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return d_.size(); }
  const std::vector<Count>& entries() const noexcept { return d_; }

  Count entry(std::span<const Vertex> subset) const {
    std::vector<Vertex> s(subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    if (static_cast<int>(s.size()) != t_) throw input_error("subset size does not match t");
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] < 0 || s[i] >= n_ || (i > 0 && s[i] == s[i - 1])) throw input_error("invalid subset");
    return d_[static_cast<std::size_t>(binom_.rank(s.data(), t_))];
  }
  Count entry(std::initializer_list<Vertex> s) const { return entry(std::span<const Vertex>(s.begin(), s.size())); }
  Count entry_at_rank(Count r) const { return d_[static_cast<std::size_t>(r)]; }

  Count sum() const {
    Count s = 0;
    for (Count x : d_) s += x;
    return s;
  }
  Count sum_of_squares() const {
    Count s = 0;
    for (Count x : d_) s += x * x;
    return s;
  }
  Count min() const { return d_.empty() ? 0 : *std::min_element(d_.begin(), d_.end()); }

 private:
  int n_, t_;
  BinomialTable binom_;
  std::vector<Count> d_;
};

inline CodegreeVector codegree_vector(const Hypergraph& g, int t) {
  if (t < 0 || t > g.k()) throw input_error("t must lie in [0, k]");
  const Count slots = binomial(g.n(), t);
  if (slots > detail::kDenseSubsetLimit) throw input_error("too many " + std::to_string(t) + "-subsets for a dense codegree vector");
  std::vector<Count> d(static_cast<std::size_t>(slots), 0);
  BinomialTable bt(g.n(), t);
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    for_each_subset_of(g.edge(i), t, [&](std::span<const Vertex> s) { ++d[static_cast<std::size_t>(bt.rank(s.data(), t))]; });
  return CodegreeVector(g.n(), t, std::move(d));
}
inline CodegreeVector codegree_vector(const Hypergraph& g) { return codegree_vector(g, g.k() - 1); }

// Sum of squared t-codegrees over all t-subsets.
inline Count co2(const Hypergraph& g, int t) {
  if (t < 0 || t > g.k()) throw input_error("t must lie in [0, k]");
  return codegree_vector(g, t).sum_of_squares();
}
inline Count co2(const Hypergraph& g) { return co2(g, g.k() - 1); }

// co2 of a graph given by an edge emitter, without materialising it.
// emit(sink) must call sink(std::span<const Vertex>) once per edge, vertices ascending,
// with no repeated edges.
template <class Emit>
Count co2_streamed(int k, int n, Emit&& emit) {
  if (k < 2) throw input_error("uniformity must be at least 2");
  const Count slots = binomial(n, k - 1);
  if (slots > detail::kDenseSubsetLimit) throw input_error("too many (k-1)-subsets for streaming");
  std::vector<std::uint32_t> d(static_cast<std::size_t>(slots), 0);
  BinomialTable bt(n, k - 1);
  std::array<Vertex, 32> buf{};
  if (k > 33) throw input_error("uniformity too large for streaming");
  emit([&](std::span<const Vertex> e) {
    for (int skip = 0; skip < k; ++skip) {
      int j = 0;
      for (int i = 0; i < k; ++i)
        if (i != skip) buf[static_cast<std::size_t>(j++)] = e[static_cast<std::size_t>(i)];
      ++d[static_cast<std::size_t>(bt.rank(buf.data(), k - 1))];
    }
  });
  Count s = 0;
  for (auto x : d) s += static_cast<Count>(x) * static_cast<Count>(x);
  return s;
}

// co2 / (C(n, k-1) (n-k+1)^2), exactly.
inline Rational scaled_density(int k, int n, Count co2_value) {
  if (n < k) throw input_error("scaled density needs n >= k");
  const Count slack = n - k + 1;
  return Rational(co2_value, binomial(n, k - 1) * slack * slack);
}
inline Rational scaled_co2_density(const Hypergraph& g) {
  if (g.n() < g.k()) throw input_error("scaled density needs n >= k");
  return scaled_density(g.k(), g.n(), co2(g));
}

inline double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

// Sum of the codegrees of the (k-1)-subsets of each edge, indexed like g.edge(i).
inline std::vector<Count> edge_weights(const Hypergraph& g) {
  const int k = g.k();
  const auto cv = codegree_vector(g, k - 1);
  std::vector<Count> w(g.num_edges(), 0);
  std::vector<Vertex> buf(static_cast<std::size_t>(k - 1));
  BinomialTable bt(g.n(), k - 1);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto e = g.edge(i);
    for (int skip = 0; skip < k; ++skip) {
      int j = 0;
      for (int q = 0; q < k; ++q)
        if (q != skip) buf[static_cast<std::size_t>(j++)] = e[static_cast<std::size_t>(q)];
      w[i] += cv.entry_at_rank(bt.rank(buf.data(), k - 1));
    }
  }
  return w;
}

inline Count edge_weight(const Hypergraph& g, std::span<const Vertex> e) {
  const auto s = detail::sorted_subset(g, e);
  if (static_cast<int>(s.size()) != g.k() || !g.has_sorted_edge(s.data())) throw input_error("edge_weight: not an edge of the graph");
  Count w = 0;
  std::vector<Vertex> sub;
  for (int skip = 0; skip < g.k(); ++skip) {
    sub.clear();
    for (int q = 0; q < g.k(); ++q)
      if (q != skip) sub.push_back(s[static_cast<std::size_t>(q)]);
    w += codegree(g, sub);
  }
  return w;
}
inline Count edge_weight(const Hypergraph& g, std::initializer_list<Vertex> e) {
  return edge_weight(g, std::span<const Vertex>(e.begin(), e.size()));
}

// Minimum (k-1)-codegree; 0 for graphs with fewer than k-1 vertices.
inline Count min_codegree(const Hypergraph& g) { return codegree_vector(g).min(); }

// Minimum over (k-1)-subsets of positive codegree; nullopt for an edgeless graph.
inline std::optional<Count> positive_min_codegree(const Hypergraph& g) {
  if (g.empty()) return std::nullopt;
  const auto cv = codegree_vector(g);
  Count best = -1;
  for (Count x : cv.entries())
    if (x > 0 && (best < 0 || x < best)) best = x;
  return best;
}

// Pairs covered by at least one edge.
inline Hypergraph shadow(const Hypergraph& g) {
  if (g.k() < 3) throw unsupported_uniformity("shadow needs k >= 3");
  HypergraphBuilder b(2, g.n());
  for (std::size_t i = 0; i < g.num_edges(); ++i) for_each_subset_of(g.edge(i), 2, [&](std::span<const Vertex> p) { b.add(p); });
  return std::move(b).build();
}

// (k-1)-graph of the sets completing an edge with x; x stays as an isolated vertex.
inline Hypergraph link(const Hypergraph& g, Vertex x) {
  detail::require_vertex(g, x);
  if (g.k() < 2) throw unsupported_uniformity("link needs k >= 2");
  HypergraphBuilder b(g.k() - 1, g.n());
  std::vector<Vertex> rest;
  for (auto ei : g.incident(x)) {
    rest.clear();
    for (Vertex v : g.edge(ei))
      if (v != x) rest.push_back(v);
    b.add(rest);
  }
  return std::move(b).build();
}

namespace detail {

inline std::vector<char> membership(const Hypergraph& g, std::span<const Vertex> set, const char* what) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : set) {
    if (v < 0 || v >= g.n()) throw input_error(std::string(what) + " contains out-of-range vertex " + std::to_string(v));
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

struct LinkSides {
  std::vector<char> a, b;
};

inline LinkSides link_sides(const Hypergraph& g, Vertex x, std::span<const Vertex> a, std::span<const Vertex> b) {
  require_k(g, 3, "restricted link");
  require_vertex(g, x);
  LinkSides s{membership(g, a, "A"), membership(g, b, "B")};
  if (s.a[static_cast<std::size_t>(x)] || s.b[static_cast<std::size_t>(x)]) throw input_error("x must not lie in A or B");
  for (std::size_t v = 0; v < s.a.size(); ++v)
    if (s.a[v] && s.b[v]) throw input_error("A and B overlap at vertex " + std::to_string(v));
  return s;
}

}  // namespace detail

// L_A(x): link pairs with both ends in A.
inline Hypergraph restricted_link(const Hypergraph& g, Vertex x, std::span<const Vertex> a) {
  const auto s = detail::link_sides(g, x, a, {});
  HypergraphBuilder b(2, g.n());
  for (auto ei : g.incident(x)) {
    std::array<Vertex, 2> p{};
    int j = 0;
    for (Vertex v : g.edge(ei))
      if (v != x) p[static_cast<std::size_t>(j++)] = v;
    if (s.a[static_cast<std::size_t>(p[0])] && s.a[static_cast<std::size_t>(p[1])]) b.add(p);
  }
  return std::move(b).build();
}

// L_{A,B}(x): link pairs with one end in A and the other in B.
inline Hypergraph restricted_link(const Hypergraph& g, Vertex x, std::span<const Vertex> a, std::span<const Vertex> bset) {
  const auto s = detail::link_sides(g, x, a, bset);
  HypergraphBuilder b(2, g.n());
  for (auto ei : g.incident(x)) {
    std::array<Vertex, 2> p{};
    int j = 0;
    for (Vertex v : g.edge(ei))
      if (v != x) p[static_cast<std::size_t>(j++)] = v;
    const auto u = static_cast<std::size_t>(p[0]), w = static_cast<std::size_t>(p[1]);
    if ((s.a[u] && s.b[w]) || (s.b[u] && s.a[w])) b.add(p);
  }
  return std::move(b).build();
}

// L^c_{A,B}(x): pairs ab with a in A, b in B and xab not an edge.
inline Hypergraph complement_restricted_link(const Hypergraph& g, Vertex x, std::span<const Vertex> a, std::span<const Vertex> bset) {
  detail::link_sides(g, x, a, bset);
  HypergraphBuilder b(2, g.n());
  for (Vertex u : a)
    for (Vertex w : bset)
      if (!g.has_edge({x, u, w})) b.add({u, w});
  return std::move(b).build();
}

// N(x, y) = {z : xyz in E}, ascending.
inline std::vector<Vertex> co_neighborhood(const Hypergraph& g, Vertex x, Vertex y) {
  detail::require_k(g, 3, "co_neighborhood");
  detail::require_vertex(g, x);
  detail::require_vertex(g, y);
  if (x == y) throw input_error("co_neighborhood needs distinct vertices");
  std::vector<Vertex> out;
  const Vertex pivot = g.degree(x) <= g.degree(y) ? x : y;
  for (auto ei : g.incident(pivot)) {
    auto e = g.edge(ei);
    if (std::find(e.begin(), e.end(), x) == e.end() || std::find(e.begin(), e.end(), y) == e.end()) continue;
    for (Vertex z : e)
      if (z != x && z != y) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct PartitionEdgeCounts {
  Count a = 0, b = 0, c = 0;
  Count ab = 0, bc = 0, ac = 0;
  Count abc = 0;
  Count total() const { return a + b + c + ab + bc + ac + abc; }
  friend bool operator==(const PartitionEdgeCounts&, const PartitionEdgeCounts&) = default;
};

// e(A), e(B), e(C), e(A,B), e(B,C), e(A,C), e(A,B,C) for a three-part partition.
inline PartitionEdgeCounts partition_edge_counts(const Hypergraph& g, const VertexPartition& p) {
  detail::require_k(g, 3, "partition_edge_counts");
  if (p.size() != 3) throw input_error("partition must have exactly 3 parts");
  if (p.order() != g.n()) throw input_error("partition does not cover the vertex set");
  PartitionEdgeCounts r;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    std::array<int, 3> cnt{};
    for (Vertex v : g.edge(i)) ++cnt[static_cast<std::size_t>(p.part_of(v))];
    if (cnt[0] == 3) ++r.a;
    else if (cnt[1] == 3) ++r.b;
    else if (cnt[2] == 3) ++r.c;
    else if (cnt[2] == 0) ++r.ab;
    else if (cnt[0] == 0) ++r.bc;
    else if (cnt[1] == 0) ++r.ac;
    else ++r.abc;
  }
  return r;
}

// Edges whose weight in g is at least the threshold.
inline Hypergraph weight_filter(const Hypergraph& g, Count threshold) {
  detail::require_k(g, 3, "weight_filter");
  const auto w = edge_weights(g);
  std::vector<Vertex> flat;
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (w[i] >= threshold) {
      auto e = g.edge(i);
      flat.insert(flat.end(), e.begin(), e.end());
    }
  return Hypergraph::from_sorted_flat(3, g.n(), std::move(flat));
}

// Peels edges through pairs of codegree <= d until every covered pair has codegree > d.
inline Hypergraph full_subgraph(const Hypergraph& g, Count d) {
  detail::require_k(g, 3, "full_subgraph");
  if (d < 1) throw input_error("full_subgraph needs d >= 1");
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<Count> cod(n * (n - (n > 0 ? 1 : 0)) / 2 + 1, 0);
  auto pairs_of = [&](std::size_t ei) {
    auto e = g.edge(ei);
    return std::array<std::size_t, 3>{detail::pair_index(e[0], e[1]), detail::pair_index(e[0], e[2]), detail::pair_index(e[1], e[2])};
  };
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    for (auto p : pairs_of(i)) ++cod[p];

  std::vector<char> alive(g.num_edges(), 1);
  std::vector<char> queued(cod.size(), 0);
  std::deque<std::pair<Vertex, Vertex>> q;
  for (Vertex b = 1; b < g.n(); ++b)
    for (Vertex a = 0; a < b; ++a) {
      const auto pi = detail::pair_index(a, b);
      if (cod[pi] > 0 && cod[pi] <= d) {
        queued[pi] = 1;
        q.emplace_back(a, b);
      }
    }
  while (!q.empty()) {
    auto [a, b] = q.front();
    q.pop_front();
    const Vertex pivot = g.degree(a) <= g.degree(b) ? a : b;
    const Vertex other = pivot == a ? b : a;
    for (auto ei : g.incident(pivot)) {
      if (!alive[ei]) continue;
      auto e = g.edge(ei);
      if (std::find(e.begin(), e.end(), other) == e.end()) continue;
      alive[ei] = 0;
      for (auto p : pairs_of(ei)) {
        --cod[p];
        if (cod[p] > 0 && cod[p] <= d && !queued[p]) {
          queued[p] = 1;
          // Recover the pair's vertices from the edge.
          for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
              if (detail::pair_index(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]) == p)
                q.emplace_back(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]);
        }
      }
    }
  }
  std::vector<Vertex> flat;
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (alive[i]) {
      auto e = g.edge(i);
      flat.insert(flat.end(), e.begin(), e.end());
    }
  return Hypergraph::from_sorted_flat(3, g.n(), std::move(flat));
}

// Number of (e, f) with e an edge, f a non-edge 4-set, |e & f| = 3. Counted directly.
inline Count boundary_pair_count(const Hypergraph& g) {
  detail::require_k(g, 4, "boundary_pair_count");
  Count total = 0;
  std::array<Vertex, 4> f{};
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto e = g.edge(i);
    for (int z = 0; z < 4; ++z)
      for (Vertex x = 0; x < g.n(); ++x) {
        if (std::find(e.begin(), e.end(), x) != e.end()) continue;
        int j = 0;
        for (int q = 0; q < 4; ++q)
          if (q != z) f[static_cast<std::size_t>(j++)] = e[static_cast<std::size_t>(q)];
        f[3] = x;
        std::sort(f.begin(), f.end());
        if (!g.has_sorted_edge(f.data())) ++total;
      }
  }
  return total;
}

// q(x) = sum_y d(x,y)^2 + 2 * sum over link pairs vw of d(v,w).
inline Count q_degree(const Hypergraph& g, Vertex x) {
  detail::require_k(g, 3, "q_degree");
  detail::require_vertex(g, x);
  const auto cv = codegree_vector(g, 2);
  Count q = 0;
  for (Vertex y = 0; y < g.n(); ++y)
    if (y != x) {
      const Count d = cv.entry_at_rank(static_cast<Count>(detail::pair_index(x, y)));
      q += d * d;
    }
  for (auto ei : g.incident(x)) {
    Vertex p[2];
    int j = 0;
    for (Vertex v : g.edge(ei))
      if (v != x) p[j++] = v;
    q += 2 * cv.entry_at_rank(static_cast<Count>(detail::pair_index(p[0], p[1])));
  }
  return q;
}

// Subgraph induced on the listed vertices; vertex vs[i] becomes i.
inline Hypergraph induced_subgraph(const Hypergraph& g, std::span<const Vertex> vs) {
  std::vector<Vertex> newid(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    detail::require_vertex(g, vs[i]);
    if (newid[static_cast<std::size_t>(vs[i])] != -1) throw input_error("repeated vertex in induced_subgraph");
    newid[static_cast<std::size_t>(vs[i])] = static_cast<Vertex>(i);
  }
  HypergraphBuilder b(g.k(), static_cast<int>(vs.size()));
  std::vector<Vertex> buf(static_cast<std::size_t>(g.k()));
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    bool keep = true;
    int j = 0;
    for (Vertex v : g.edge(i)) {
      if (newid[static_cast<std::size_t>(v)] < 0) {
        keep = false;
        break;
      }
      buf[static_cast<std::size_t>(j++)] = newid[static_cast<std::size_t>(v)];
    }
    if (keep) b.add(buf);
  }
  return std::move(b).build();
}

// Removes x and shifts the labels above it down by one.
inline Hypergraph delete_vertex(const Hypergraph& g, Vertex x) {
  detail::require_vertex(g, x);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.n(); ++v)
    if (v != x) keep.push_back(v);
  return induced_subgraph(g, keep);
}

// Image of g under the bijection v -> perm[v].
inline Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw input_error("relabel: permutation has wrong length");
  std::vector<char> seen(perm.size(), 0);
  for (Vertex v : perm) {
    if (v < 0 || v >= g.n() || seen[static_cast<std::size_t>(v)]) throw input_error("relabel: not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  HypergraphBuilder b(g.k(), g.n());
  std::vector<Vertex> buf(static_cast<std::size_t>(g.k()));
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    auto e = g.edge(i);
    for (int j = 0; j < g.k(); ++j) buf[static_cast<std::size_t>(j)] = perm[static_cast<std::size_t>(e[static_cast<std::size_t>(j)])];
    b.add(buf);
  }
  return std::move(b).build_strict();
}

// All k-subsets that are not edges.
inline Hypergraph complement(const Hypergraph& g) {
  std::vector<Vertex> flat;
  for_each_subset(g.n(), g.k(), [&](std::span<const Vertex> s) {
    if (!g.has_sorted_edge(s.data())) flat.insert(flat.end(), s.begin(), s.end());
  });
  return Hypergraph::from_sorted_flat(g.k(), g.n(), std::move(flat));
}

// Copy of g with extra edges; repeats merge.
inline Hypergraph with_edges(const Hypergraph& g, const std::vector<std::vector<Vertex>>& extra) {
  HypergraphBuilder b(g.k(), g.n());
  for (std::size_t i = 0; i < g.num_edges(); ++i) b.add(g.edge(i));
  for (const auto& e : extra) b.add(e);
  return std::move(b).build();
}

}  // namespace co2lab
