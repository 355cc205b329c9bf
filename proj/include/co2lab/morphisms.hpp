#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "co2lab/combinatorics.hpp"
#include "co2lab/error.hpp"
#include "co2lab/hypergraph.hpp"

namespace co2lab {

enum class EmbedMode { subgraph, induced };

inline const char* to_string(EmbedMode m) { return m == EmbedMode::induced ? "induced" : "subgraph"; }

// map[p] is the host vertex of pattern vertex p.
struct Embedding {
  std::vector<Vertex> map;
  EmbedMode mode = EmbedMode::subgraph;
};

// Direct re-check of an embedding against its mode.
inline bool verify_embedding(const Hypergraph& host, const Hypergraph& pattern, const Embedding& emb) {
  if (host.k() != pattern.k() || static_cast<int>(emb.map.size()) != pattern.n()) return false;
  std::vector<char> used(static_cast<std::size_t>(host.n()), 0);
  for (Vertex v : emb.map) {
    if (v < 0 || v >= host.n() || used[static_cast<std::size_t>(v)]) return false;
    used[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> img(static_cast<std::size_t>(pattern.k()));
  bool ok = true;
  for_each_subset(pattern.n(), pattern.k(), [&](std::span<const Vertex> s) {
    if (!ok) return;
    const bool pe = pattern.has_sorted_edge(s.data());
    if (!pe && emb.mode == EmbedMode::subgraph) return;
    for (std::size_t i = 0; i < s.size(); ++i) img[i] = emb.map[static_cast<std::size_t>(s[i])];
    if (host.has_edge(img) != pe) ok = false;
  });
  return ok;
}

namespace detail {

// Assignment order and the k-subsets to test at each position.
struct PatternPlan {
  struct Check {
    std::array<std::uint8_t, 16> pos{};  // positions, any order
    bool edge = true;
  };
  int k = 0, pn = 0;
  EmbedMode mode = EmbedMode::subgraph;
  std::vector<Vertex> order;    // order[p] = pattern vertex at position p
  std::vector<Count> deg;       // pattern degree at position p
  std::vector<std::vector<Check>> checks;
};

inline PatternPlan make_plan(const Hypergraph& pat, EmbedMode mode, std::span<const Vertex> prefix = {}) {
  if (pat.k() > 16) throw input_error("pattern uniformity too large");
  PatternPlan plan;
  plan.k = pat.k();
  plan.pn = pat.n();
  plan.mode = mode;
  const int n = pat.n();
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  auto place = [&](Vertex v) {
    pos[static_cast<std::size_t>(v)] = static_cast<int>(plan.order.size());
    plan.order.push_back(v);
  };
  for (Vertex v : prefix) place(v);
  // Descending degree; ties go to the vertex closing more edges, then the lower index.
  while (static_cast<int>(plan.order.size()) < n) {
    Vertex best = -1;
    Count best_deg = -1, best_close = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (pos[static_cast<std::size_t>(v)] >= 0) continue;
      Count close = 0;
      for (auto ei : pat.incident(v)) {
        int placed = 0;
        for (Vertex u : pat.edge(ei)) placed += (u != v && pos[static_cast<std::size_t>(u)] >= 0);
        if (placed == pat.k() - 1) ++close;
      }
      const Count d = pat.degree(v);
      if (d > best_deg || (d == best_deg && close > best_close)) {
        best = v;
        best_deg = d;
        best_close = close;
      }
    }
    place(best);
  }
  plan.deg.resize(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) plan.deg[static_cast<std::size_t>(p)] = pat.degree(plan.order[static_cast<std::size_t>(p)]);
  plan.checks.assign(static_cast<std::size_t>(n), {});
  for_each_subset(n, pat.k(), [&](std::span<const Vertex> s) {
    const bool e = pat.has_sorted_edge(s.data());
    if (!e && mode == EmbedMode::subgraph) return;
    PatternPlan::Check c;
    c.edge = e;
    int last = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const int p = pos[static_cast<std::size_t>(s[i])];
      c.pos[i] = static_cast<std::uint8_t>(p);
      last = std::max(last, p);
    }
    plan.checks[static_cast<std::size_t>(last)].push_back(c);
  });
  return plan;
}

// Host adaptor over a Hypergraph.
struct GraphHost {
  const Hypergraph& g;
  int n() const { return g.n(); }
  Count degree(Vertex v) const { return g.degree(v); }
  bool has_sorted(const Vertex* s) const { return g.has_sorted_edge(s); }
};

// Backtracking matcher. Host must provide n(), degree(v) and has_sorted(const Vertex*).
template <class Host>
class Matcher {
 public:
  Matcher(const PatternPlan& plan, const Host& host) : plan_(plan), host_(host), img_(static_cast<std::size_t>(plan.pn), -1),
        used_(static_cast<std::size_t>(host.n()), 0) {}

  // Extends the assignment of the first `fixed` positions (already given in img) to a full embedding.
  bool run(const std::vector<Vertex>& fixed_prefix) {
    const int f = static_cast<int>(fixed_prefix.size());
    for (int p = 0; p < f; ++p) {
      const Vertex h = fixed_prefix[static_cast<std::size_t>(p)];
      if (used_[static_cast<std::size_t>(h)]) return clear(p), false;
      img_[static_cast<std::size_t>(p)] = h;
      used_[static_cast<std::size_t>(h)] = 1;
      if (!checks_pass(p)) return clear(p + 1), false;
    }
    const bool ok = extend(f);
    if (!ok) clear(f);
    return ok;
  }

  // Pattern vertex v maps to result[v].
  std::vector<Vertex> mapping() const {
    std::vector<Vertex> m(static_cast<std::size_t>(plan_.pn));
    for (int p = 0; p < plan_.pn; ++p) m[static_cast<std::size_t>(plan_.order[static_cast<std::size_t>(p)])] = img_[static_cast<std::size_t>(p)];
    return m;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void clear(int upto) {
    for (int p = 0; p < upto; ++p) {
      if (img_[static_cast<std::size_t>(p)] >= 0) used_[static_cast<std::size_t>(img_[static_cast<std::size_t>(p)])] = 0;
      img_[static_cast<std::size_t>(p)] = -1;
    }
  }

  bool checks_pass(int p) const {
    std::array<Vertex, 16> buf{};
    const int k = plan_.k;
    for (const auto& c : plan_.checks[static_cast<std::size_t>(p)]) {
      for (int i = 0; i < k; ++i) buf[static_cast<std::size_t>(i)] = img_[c.pos[static_cast<std::size_t>(i)]];
      std::sort(buf.begin(), buf.begin() + k);
      if (host_.has_sorted(buf.data()) != c.edge) return false;
    }
    return true;
  }

  bool extend(int p) {
    if (p == plan_.pn) return true;
    ++nodes_;
    const Count need = plan_.deg[static_cast<std::size_t>(p)];
    for (Vertex h = 0; h < host_.n(); ++h) {
      if (used_[static_cast<std::size_t>(h)] || host_.degree(h) < need) continue;
      img_[static_cast<std::size_t>(p)] = h;
      used_[static_cast<std::size_t>(h)] = 1;
      if (checks_pass(p) && extend(p + 1)) return true;
      used_[static_cast<std::size_t>(h)] = 0;
      img_[static_cast<std::size_t>(p)] = -1;
    }
    return false;
  }

  const PatternPlan& plan_;
  const Host& host_;
  std::vector<Vertex> img_;
  std::vector<char> used_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// First embedding of pattern into host in the fixed search order (host candidates ascending).
inline std::optional<Embedding> contains(const Hypergraph& host, const Hypergraph& pattern, EmbedMode mode = EmbedMode::subgraph) {
  if (host.k() != pattern.k()) throw input_error("uniformity mismatch between host and pattern");
  if (pattern.n() > host.n()) return std::nullopt;
  if (mode == EmbedMode::subgraph && pattern.num_edges() > host.num_edges()) return std::nullopt;
  const auto plan = detail::make_plan(pattern, mode);
  detail::GraphHost h{host};
  detail::Matcher<detail::GraphHost> m(plan, h);
  if (!m.run({})) return std::nullopt;
  return Embedding{m.mapping(), mode};
}

struct FreenessResult {
  bool free = true;
  std::optional<std::size_t> member;  // index into the family of the first contained member
  std::optional<Embedding> witness;
};

inline FreenessResult is_free(const Hypergraph& host, std::span<const Hypergraph> family, EmbedMode mode = EmbedMode::subgraph) {
  for (const auto& f : family)
    if (f.k() != host.k()) throw input_error("uniformity mismatch between host and family member");
  for (std::size_t i = 0; i < family.size(); ++i)
    if (auto e = contains(host, family[i], mode)) return {false, i, std::move(e)};
  return {};
}
inline FreenessResult is_free(const Hypergraph& host, const std::vector<Hypergraph>& family, EmbedMode mode = EmbedMode::subgraph) {
  return is_free(host, std::span<const Hypergraph>(family), mode);
}

namespace detail {

// Lightweight edge set for the max-string search: edges as vertex tuples and an O(1) lookup.
struct CanonGraph {
  int k = 0, n = 0;
  std::vector<Vertex> flat;
  std::vector<std::vector<std::uint32_t>> inc;
  std::vector<char> present;  // by colex rank; empty means use `lookup`
  BinomialTable binom;

  CanonGraph(int k_, int n_, std::vector<Vertex> flat_) : k(k_), n(n_), flat(std::move(flat_)), inc(static_cast<std::size_t>(n_)), binom(n_, k_) {
    const std::size_t m = k == 0 ? 0 : flat.size() / static_cast<std::size_t>(k);
    for (std::size_t e = 0; e < m; ++e)
      for (int j = 0; j < k; ++j) inc[static_cast<std::size_t>(flat[e * k + j])].push_back(static_cast<std::uint32_t>(e));
    present.assign(static_cast<std::size_t>(binomial(n, k)), 0);
    for (std::size_t e = 0; e < m; ++e) present[static_cast<std::size_t>(binom.rank(flat.data() + e * k, k))] = 1;
  }
  std::size_t m() const { return flat.size() / static_cast<std::size_t>(k); }
  const Vertex* edge(std::size_t e) const { return flat.data() + e * static_cast<std::size_t>(k); }
  bool has(const Vertex* sorted) const { return present[static_cast<std::size_t>(binom.rank(sorted, k))] != 0; }
};

// Twin classes: u ~ v iff the transposition (u v) is an automorphism. Returns class id per vertex,
// ids ordered by smallest member.
inline std::vector<int> twin_classes(const CanonGraph& g, const std::vector<int>& color) {
  const int n = g.n, k = g.k;
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> reps;
  std::vector<Vertex> buf(static_cast<std::size_t>(k));
  auto maps_into = [&](Vertex u, Vertex v) {
    for (auto ei : g.inc[static_cast<std::size_t>(u)]) {
      const Vertex* e = g.edge(ei);
      if (std::find(e, e + k, v) != e + k) continue;
      for (int j = 0; j < k; ++j) buf[static_cast<std::size_t>(j)] = e[j] == u ? v : e[j];
      std::sort(buf.begin(), buf.end());
      if (!g.has(buf.data())) return false;
    }
    return true;
  };
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t r = 0; r < reps.size(); ++r) {
      const Vertex u = reps[r];
      if (color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(v)]) continue;
      if (g.inc[static_cast<std::size_t>(u)].size() != g.inc[static_cast<std::size_t>(v)].size()) continue;
      if (maps_into(u, v) && maps_into(v, u)) {
        cls[static_cast<std::size_t>(v)] = static_cast<int>(r);
        break;
      }
    }
    if (cls[static_cast<std::size_t>(v)] < 0) {
      cls[static_cast<std::size_t>(v)] = static_cast<int>(reps.size());
      reps.push_back(v);
    }
  }
  return cls;
}

// Invariant colouring by iterated refinement: a vertex's new colour ranks the pair
// (old colour, sorted multiset of the sorted colour tuples of its edges minus itself).
inline std::vector<int> refine_colors(const CanonGraph& g) {
  const int n = g.n, k = g.k;
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  int classes = n == 0 ? 0 : 1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::vector<int>> tuples;
      for (auto ei : g.inc[static_cast<std::size_t>(v)]) {
        std::vector<int> t;
        const Vertex* e = g.edge(ei);
        for (int j = 0; j < k; ++j)
          if (e[j] != v) t.push_back(color[static_cast<std::size_t>(e[j])]);
        std::sort(t.begin(), t.end());
        tuples.push_back(std::move(t));
      }
      std::sort(tuples.begin(), tuples.end());
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      s.push_back(static_cast<int>(tuples.size()));
      for (const auto& t : tuples) s.insert(s.end(), t.begin(), t.end());
    }
    std::vector<Vertex> idx(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) idx[static_cast<std::size_t>(v)] = v;
    std::sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
    std::vector<int> next(static_cast<std::size_t>(n), 0);
    int c = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i > 0 && sig[static_cast<std::size_t>(idx[i])] != sig[static_cast<std::size_t>(idx[i - 1])]) ++c;
      next[static_cast<std::size_t>(idx[i])] = c;
    }
    const int now = n == 0 ? 0 : c + 1;
    color = std::move(next);
    if (now == classes) break;
    classes = now;
  }
  return color;
}

// Largest characteristic string over colex-ordered k-subsets of the relabelled graph.
// The string is built one new label at a time: placing a vertex at position p fixes the block
// of slots whose largest vertex is p. Blocks are stored as ascending colex ranks; at the first
// difference the smaller rank wins, and a proper prefix loses.
class MaxString {
 public:
  // cells: if nonempty, position p may only take vertices of colour cell_of_pos[p].
  MaxString(const CanonGraph& g, std::vector<int> color, bool use_cells)
      : g_(g), color_(std::move(color)), use_cells_(use_cells), twin_(twin_classes(g, color_)), pos_(static_cast<std::size_t>(g.n), -1),
        order_(static_cast<std::size_t>(g.n), -1), blocks_(static_cast<std::size_t>(g.n)) {
    if (use_cells_) {
      std::vector<int> sizes;
      for (int c : color_) {
        if (c >= static_cast<int>(sizes.size())) sizes.resize(static_cast<std::size_t>(c) + 1, 0);
        ++sizes[static_cast<std::size_t>(c)];
      }
      for (std::size_t c = 0; c < sizes.size(); ++c) cell_of_pos_.insert(cell_of_pos_.end(), static_cast<std::size_t>(sizes[c]), static_cast<int>(c));
    }
  }

  // Full search; returns the best order (order[p] = old vertex at new label p).
  std::vector<Vertex> best_order() {
    test_mode_ = false;
    have_best_ = false;
    dfs(0, false);
    return best_order_;
  }

  // True iff the identity labelling already attains the maximum.
  bool identity_is_max() {
    test_mode_ = true;
    best_blocks_.assign(static_cast<std::size_t>(g_.n), {});
    for (Vertex p = 0; p < g_.n; ++p) {
      pos_[static_cast<std::size_t>(p)] = p;
      best_blocks_[static_cast<std::size_t>(p)] = block_for(p);
    }
    std::fill(pos_.begin(), pos_.end(), -1);
    have_best_ = true;
    found_greater_ = false;
    dfs(0, true);
    return !found_greater_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::vector<Count> block_for(Vertex v) const {
    std::vector<Count> b;
    std::array<Vertex, 64> buf{};
    for (auto ei : g_.inc[static_cast<std::size_t>(v)]) {
      const Vertex* e = g_.edge(ei);
      bool all = true;
      for (int j = 0; j < g_.k; ++j) {
        const int p = pos_[static_cast<std::size_t>(e[j])];
        if (p < 0) {
          all = false;
          break;
        }
        buf[static_cast<std::size_t>(j)] = p;
      }
      if (!all) continue;
      std::sort(buf.begin(), buf.begin() + g_.k);
      b.push_back(g_.binom.rank(buf.data(), g_.k));
    }
    std::sort(b.begin(), b.end());
    return b;
  }

  static int compare(const std::vector<Count>& a, const std::vector<Count>& b) {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    if (a.size() == b.size()) return 0;
    return a.size() > b.size() ? 1 : -1;
  }

  // equal: the current prefix equals the best prefix (false once strictly greater or no best yet).
  void dfs(int p, bool equal) {
    if (found_greater_) return;
    ++nodes_;
    if (p == g_.n) {
      if (!test_mode_ && (!have_best_ || !equal)) {
        best_order_ = order_;
        best_blocks_ = blocks_;
        have_best_ = true;
        ++version_;
      }
      return;
    }
    std::vector<char> tried_twin(static_cast<std::size_t>(g_.n), 0);
    for (Vertex v = 0; v < g_.n; ++v) {
      if (pos_[static_cast<std::size_t>(v)] >= 0) continue;
      if (use_cells_ && color_[static_cast<std::size_t>(v)] != cell_of_pos_[static_cast<std::size_t>(p)]) continue;
      const int tc = twin_[static_cast<std::size_t>(v)];
      if (tried_twin[static_cast<std::size_t>(tc)]) continue;
      tried_twin[static_cast<std::size_t>(tc)] = 1;
      pos_[static_cast<std::size_t>(v)] = p;
      order_[static_cast<std::size_t>(p)] = v;
      blocks_[static_cast<std::size_t>(p)] = block_for(v);
      bool child_equal = false;
      bool skip = false;
      if (have_best_ && equal) {
        const int c = compare(blocks_[static_cast<std::size_t>(p)], best_blocks_[static_cast<std::size_t>(p)]);
        if (c < 0) skip = true;
        else if (c > 0) {
          if (test_mode_) found_greater_ = true;
        } else {
          child_equal = true;
        }
      }
      if (!skip && !found_greater_) {
        const auto before = version_;
        dfs(p + 1, child_equal);
        // A new best found below extends the current prefix.
        if (version_ != before) equal = true;
      }
      pos_[static_cast<std::size_t>(v)] = -1;
      order_[static_cast<std::size_t>(p)] = -1;
      if (found_greater_) return;
    }
  }

  const CanonGraph& g_;
  std::vector<int> color_;
  bool use_cells_;
  std::vector<int> twin_;
  std::vector<int> cell_of_pos_;
  std::vector<int> pos_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Count>> blocks_;
  std::vector<std::vector<Count>> best_blocks_;
  std::vector<Vertex> best_order_;
  bool have_best_ = false;
  bool test_mode_ = false;
  bool found_greater_ = false;
  std::uint64_t version_ = 0;
  std::uint64_t nodes_ = 0;
};

inline constexpr Count kCanonSlotLimit = Count{1} << 26;

inline CanonGraph canon_graph(const Hypergraph& g) {
  if (binomial(g.n(), g.k()) > kCanonSlotLimit) throw input_error("graph too large for canonical labelling");
  return CanonGraph(g.k(), g.n(), g.flat_edges());
}

}  // namespace detail

// perm[v] = canonical label of vertex v.
inline std::vector<Vertex> canonical_labeling(const Hypergraph& g) {
  const auto cg = detail::canon_graph(g);
  detail::MaxString ms(cg, detail::refine_colors(cg), true);
  const auto order = ms.best_order();
  std::vector<Vertex> perm(static_cast<std::size_t>(g.n()));
  for (std::size_t p = 0; p < order.size(); ++p) perm[static_cast<std::size_t>(order[p])] = static_cast<Vertex>(p);
  return perm;
}

inline std::string encode_edges(int k, int n, std::vector<std::vector<Vertex>> edges) {
  std::sort(edges.begin(), edges.end());
  std::string s = "k=" + std::to_string(k) + ";n=" + std::to_string(n) + ";";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += '|';
    for (std::size_t j = 0; j < edges[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(edges[i][j]);
    }
  }
  return s;
}

// Relabelling-invariant encoding; equal strings iff isomorphic.
inline std::string canonical_form(const Hypergraph& g) {
  const auto perm = canonical_labeling(g);
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    std::vector<Vertex> e;
    for (Vertex v : g.edge(i)) e.push_back(perm[static_cast<std::size_t>(v)]);
    std::sort(e.begin(), e.end());
    edges.push_back(std::move(e));
  }
  return encode_edges(g.k(), g.n(), std::move(edges));
}

inline Hypergraph from_canonical_form(const std::string& form) {
  int k = 0, n = 0;
  if (std::sscanf(form.c_str(), "k=%d;n=%d;", &k, &n) != 2) throw input_error("malformed canonical form");
  const auto body = form.substr(form.find(';', form.find(';') + 1) + 1);
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> cur;
  int acc = -1;
  for (char ch : body + "|") {
    if (ch >= '0' && ch <= '9') acc = (acc < 0 ? 0 : acc * 10) + (ch - '0');
    else if (ch == ',' || ch == '|') {
      if (acc >= 0) cur.push_back(acc);
      acc = -1;
      if (ch == '|' && !cur.empty()) {
        edges.push_back(cur);
        cur.clear();
      }
    } else {
      throw input_error("malformed canonical form");
    }
  }
  return Hypergraph(k, n, edges);
}

inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.k() != b.k() || a.n() != b.n() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace co2lab
