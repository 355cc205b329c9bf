#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "co2lab/combinatorics.hpp"
#include "co2lab/error.hpp"
#include "co2lab/hypergraph.hpp"
#include "co2lab/measures.hpp"
#include "co2lab/morphisms.hpp"

namespace co2lab {

// l1 counts edges (the codegree l1-norm divided by k).
enum class Objective { l1, co2, min_codegree, positive_min_codegree };

inline const char* to_string(Objective o) {
  switch (o) {
    case Objective::l1: return "l1";
    case Objective::co2: return "co2";
    case Objective::min_codegree: return "min_codegree";
    case Objective::positive_min_codegree: return "positive_min_codegree";
  }
  return "?";
}

inline Objective parse_objective(std::string_view s) {
  if (s == "l1" || s == "edges") return Objective::l1;
  if (s == "co2") return Objective::co2;
  if (s == "min_codegree" || s == "min-codegree") return Objective::min_codegree;
  if (s == "positive_min_codegree" || s == "positive-min-codegree" || s == "co+") return Objective::positive_min_codegree;
  throw input_error("unknown objective '" + std::string(s) + "' (expected l1, co2, min_codegree, positive_min_codegree)");
}

struct SearchProblem {
  int n = 0;
  int k = 3;
  std::vector<Hypergraph> family;
  EmbedMode mode = EmbedMode::subgraph;
  Objective objective = Objective::co2;
};

struct SearchOptions {
  Count slot_limit = 35;
  bool bounded = false;
  double time_limit_s = 60.0;  // bounded mode only
  int threads = 1;
  int split_depth = 3;
  std::size_t witness_cap = 100;
  // Switches for oracle comparisons.
  bool prune_canonical = true;
  bool prune_bound = true;
};

enum class ProofMode { exhaustive, bounded };
inline const char* to_string(ProofMode p) { return p == ProofMode::exhaustive ? "exhaustive" : "bounded"; }

struct SearchResult {
  Count optimum = 0;
  bool feasible = true;  // false when no graph on n vertices is free
  std::vector<std::string> witnesses;  // canonical forms
  bool witnesses_truncated = false;
  std::uint64_t nodes_explored = 0;
  ProofMode proof_mode = ProofMode::exhaustive;
  std::vector<std::string> notes;
};

inline Count objective_value(const Hypergraph& g, Objective o) {
  switch (o) {
    case Objective::l1: return static_cast<Count>(g.num_edges());
    case Objective::co2: return co2(g);
    case Objective::min_codegree: return min_codegree(g);
    case Objective::positive_min_codegree: return positive_min_codegree(g).value_or(0);
  }
  return 0;
}

inline bool verify_witness(const Hypergraph& g, const SearchProblem& p, Count claimed) {
  if (g.n() != p.n || g.k() != p.k) return false;
  for (const auto& f : p.family)
    if (f.k() != g.k()) return false;
  if (!is_free(g, p.family, p.mode).free) return false;
  return objective_value(g, p.objective) == claimed;
}

namespace detail {

struct MaskHost {
  int nv;
  std::uint64_t mask;
  const BinomialTable* binom;
  int k;
  const std::uint8_t* deg;
  int n() const { return nv; }
  Count degree(Vertex v) const { return deg[v]; }
  bool has_sorted(const Vertex* s) const { return (mask >> binom->rank(s, k)) & 1U; }
};

class ExtremalSearch {
 public:
  ExtremalSearch(const SearchProblem& p, const SearchOptions& o) : p_(p), o_(o), binom_(p.n, p.k) {
    n_ = p.n;
    k_ = p.k;
    slots_ = static_cast<int>(binomial(n_, k_));
    tsets_ = static_cast<int>(binomial(n_, k_ - 1));
    for_each_subset(n_, k_, [&](std::span<const Vertex> s) {
      const auto r = static_cast<std::size_t>(binom_.rank(s.data(), k_));
      if (slot_vertices_.size() <= r) slot_vertices_.resize(r + 1);
      slot_vertices_[r].assign(s.begin(), s.end());
    });
    BinomialTable tb(n_, k_ - 1);
    slot_tsets_.resize(static_cast<std::size_t>(slots_));
    for (int s = 0; s < slots_; ++s) {
      const auto& vs = slot_vertices_[static_cast<std::size_t>(s)];
      for (int skip = 0; skip < k_; ++skip) {
        std::vector<Vertex> t;
        for (int j = 0; j < k_; ++j)
          if (j != skip) t.push_back(vs[static_cast<std::size_t>(j)]);
        slot_tsets_[static_cast<std::size_t>(s)].push_back(static_cast<int>(tb.rank(t.data(), k_ - 1)));
      }
    }
    // suffix[s][T]: slots strictly above s containing T. Row `slots_` is for s = -1.
    suffix_.assign(static_cast<std::size_t>(slots_ + 1), std::vector<int>(static_cast<std::size_t>(tsets_), 0));
    for (int s = slots_ - 2; s >= -1; --s) {
      auto& row = suffix_[row_of(s)];
      row = suffix_[row_of(s + 1)];
      for (int t : slot_tsets_[static_cast<std::size_t>(s + 1)]) ++row[static_cast<std::size_t>(t)];
    }
    for (std::size_t i = 0; i < p.family.size(); ++i) {
      const auto& f = p.family[i];
      if (f.n() > n_) continue;
      if (p.mode == EmbedMode::subgraph) {
        std::vector<PatternPlan> per_edge;
        for (std::size_t e = 0; e < f.num_edges(); ++e) per_edge.push_back(make_plan(f, EmbedMode::subgraph, f.edge(e)));
        edge_plans_.push_back(std::move(per_edge));
      } else {
        full_plans_.push_back(make_plan(f, EmbedMode::induced));
      }
    }
    perms_ = all_perms(k_);
  }

  SearchResult run() {
    start_ = std::chrono::steady_clock::now();
    Node root;
    root.mask = 0;
    root.last = -1;
    root.deg.assign(static_cast<std::size_t>(n_), 0);
    root.cod.assign(static_cast<std::size_t>(tsets_), 0);

    // Phase 1: visit shallow nodes inline, collecting split points in DFS order.
    Collector shallow;
    std::vector<Node> tasks;
    walk(root, shallow, &tasks, 0);
    // Phase 2: independent subtrees.
    std::vector<Collector> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) walk(tasks[i], results[i], nullptr, o_.split_depth);
    };
    const int threads = std::max(1, o_.threads);
    if (threads == 1 || tasks.size() < 2) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    SearchResult r;
    r.nodes_explored = shallow.nodes;
    Count best = shallow.best;
    for (const auto& c : results) {
      r.nodes_explored += c.nodes;
      best = std::max(best, c.best);
    }
    std::vector<std::uint64_t> masks;
    auto take = [&](const Collector& c) {
      if (c.best != best) return;
      for (auto m : c.masks) {
        if (masks.size() == o_.witness_cap) {
          r.witnesses_truncated = true;
          return;
        }
        masks.push_back(m);
      }
      if (c.truncated) r.witnesses_truncated = true;
    };
    take(shallow);
    for (const auto& c : results) take(c);
    r.feasible = best >= 0;
    r.optimum = std::max<Count>(best, 0);
    std::vector<std::string> seen;
    for (auto m : masks) {
      auto form = canonical_form(to_graph(m));
      if (std::find(seen.begin(), seen.end(), form) == seen.end()) seen.push_back(std::move(form));
    }
    r.witnesses = std::move(seen);
    r.proof_mode = stopped_.load() ? ProofMode::bounded : ProofMode::exhaustive;
    if (!r.feasible) r.notes.push_back("no graph on " + std::to_string(n_) + " vertices avoids the family");
    return r;
  }

  Hypergraph to_graph(std::uint64_t mask) const {
    std::vector<std::vector<Vertex>> edges;
    for (int s = 0; s < slots_; ++s)
      if ((mask >> s) & 1U) edges.push_back(slot_vertices_[static_cast<std::size_t>(s)]);
    return Hypergraph(k_, n_, edges);
  }

 private:
  struct Node {
    std::uint64_t mask = 0;
    int last = -1;
    std::vector<std::uint8_t> deg;
    std::vector<int> cod;
  };

  struct Collector {
    Count best = -1;
    std::vector<std::uint64_t> masks;
    bool truncated = false;
    std::uint64_t nodes = 0;
  };

  std::size_t row_of(int s) const { return s < 0 ? static_cast<std::size_t>(slots_) : static_cast<std::size_t>(s); }

  static std::vector<std::vector<int>> all_perms(int k) {
    std::vector<int> p(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  Count value(const Node& x) const {
    switch (p_.objective) {
      case Objective::l1: return std::popcount(x.mask);
      case Objective::co2: {
        Count s = 0;
        for (int c : x.cod) s += Count{c} * c;
        return s;
      }
      case Objective::min_codegree: return *std::min_element(x.cod.begin(), x.cod.end());
      case Objective::positive_min_codegree: {
        Count m = 0;
        for (int c : x.cod)
          if (c > 0 && (m == 0 || c < m)) m = c;
        return m;
      }
    }
    return 0;
  }

  // Optimistic value over all supersets using slots above `last` (plus `extra`, if >= 0).
  Count bound(const Node& x, int extra, int last) const {
    const auto& suf = suffix_[row_of(last)];
    auto cod_at = [&](int t, bool& hit) {
      int c = x.cod[static_cast<std::size_t>(t)];
      hit = c > 0;
      if (extra >= 0)
        for (int u : slot_tsets_[static_cast<std::size_t>(extra)])
          if (u == t) {
            ++c;
            hit = true;
          }
      return c;
    };
    switch (p_.objective) {
      case Objective::l1: return std::popcount(x.mask) + (extra >= 0) + (slots_ - 1 - last);
      case Objective::co2: {
        Count s = 0;
        for (int t = 0; t < tsets_; ++t) {
          bool hit;
          const Count c = cod_at(t, hit) + suf[static_cast<std::size_t>(t)];
          s += c * c;
        }
        return s;
      }
      case Objective::min_codegree: {
        Count m = std::numeric_limits<Count>::max();
        for (int t = 0; t < tsets_; ++t) {
          bool hit;
          m = std::min<Count>(m, cod_at(t, hit) + suf[static_cast<std::size_t>(t)]);
        }
        return m;
      }
      case Objective::positive_min_codegree: {
        // Pairs already covered stay covered; their final codegree caps the minimum.
        Count m = n_ - k_ + 1;
        for (int t = 0; t < tsets_; ++t) {
          bool hit;
          const Count c = cod_at(t, hit);
          if (hit) m = std::min<Count>(m, c + suf[static_cast<std::size_t>(t)]);
        }
        return m;
      }
    }
    return 0;
  }

  // Does the graph `mask` (which contains slot e) hold a copy of an active member through e?
  bool copy_through(std::uint64_t mask, int e, const std::vector<std::uint8_t>& deg) const {
    MaskHost host{n_, mask, &binom_, k_, deg.data()};
    const auto& ev = slot_vertices_[static_cast<std::size_t>(e)];
    std::vector<Vertex> fixed(static_cast<std::size_t>(k_));
    for (const auto& plans : edge_plans_)
      for (const auto& plan : plans)
        for (const auto& perm : perms_) {
          for (int j = 0; j < k_; ++j) fixed[static_cast<std::size_t>(j)] = ev[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
          bool deg_ok = true;
          for (int j = 0; j < k_; ++j) deg_ok = deg_ok && deg[static_cast<std::size_t>(fixed[static_cast<std::size_t>(j)])] >= plan.deg[static_cast<std::size_t>(j)];
          if (!deg_ok) continue;
          Matcher<MaskHost> m(plan, host);
          if (m.run(fixed)) return true;
        }
    return false;
  }

  bool induced_free(const Node& x) const {
    MaskHost host{n_, x.mask, &binom_, k_, x.deg.data()};
    for (const auto& plan : full_plans_) {
      Matcher<MaskHost> m(plan, host);
      if (m.run({})) return false;
    }
    return true;
  }

  bool canonical(std::uint64_t mask) const {
    std::vector<Vertex> flat;
    for (std::uint64_t r = mask; r; r &= r - 1) {
      const auto& vs = slot_vertices_[static_cast<std::size_t>(std::countr_zero(r))];
      flat.insert(flat.end(), vs.begin(), vs.end());
    }
    CanonGraph g(k_, n_, std::move(flat));
    MaxString ms(g, std::vector<int>(static_cast<std::size_t>(n_), 0), false);
    return ms.identity_is_max();
  }

  bool out_of_time() {
    if (!o_.bounded) return false;
    if (stopped_.load(std::memory_order_relaxed)) return true;
    const double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (el > o_.time_limit_s) stopped_.store(true);
    return stopped_.load();
  }

  void raise_incumbent(Count v) {
    Count cur = incumbent_.load();
    while (v > cur && !incumbent_.compare_exchange_weak(cur, v)) {
    }
  }

  void consider(const Node& x, Collector& c) {
    const Count v = value(x);
    if (v < c.best || v < incumbent_.load()) return;
    if (p_.mode == EmbedMode::induced && !induced_free(x)) return;
    if (v > c.best) {
      c.best = v;
      c.masks.clear();
      c.truncated = false;
    }
    if (c.masks.size() < o_.witness_cap) c.masks.push_back(x.mask);
    else c.truncated = true;
    raise_incumbent(v);
  }

  void walk(const Node& x, Collector& c, std::vector<Node>* tasks, int depth) {
    if (tasks && depth == o_.split_depth) {
      tasks->push_back(x);
      return;
    }
    if ((++c.nodes & 4095U) == 0 && out_of_time()) return;
    if (stopped_.load(std::memory_order_relaxed)) return;
    consider(x, c);
    for (int e = x.last + 1; e < slots_; ++e) {
      if (o_.prune_bound && bound(x, e, e) < incumbent_.load()) continue;
      Node y;
      y.mask = x.mask | (std::uint64_t{1} << e);
      y.last = e;
      y.deg = x.deg;
      for (Vertex v : slot_vertices_[static_cast<std::size_t>(e)]) ++y.deg[static_cast<std::size_t>(v)];
      if (p_.mode == EmbedMode::subgraph && !edge_plans_.empty() && copy_through(y.mask, e, y.deg)) continue;
      if (o_.prune_canonical && !canonical(y.mask)) continue;
      y.cod = x.cod;
      for (int t : slot_tsets_[static_cast<std::size_t>(e)]) ++y.cod[static_cast<std::size_t>(t)];
      walk(y, c, tasks, depth + 1);
      if (stopped_.load(std::memory_order_relaxed)) return;
    }
  }

  const SearchProblem& p_;
  const SearchOptions& o_;
  BinomialTable binom_;
  int n_ = 0, k_ = 0, slots_ = 0, tsets_ = 0;
  std::vector<std::vector<Vertex>> slot_vertices_;
  std::vector<std::vector<int>> slot_tsets_;
  std::vector<std::vector<int>> suffix_;
  std::vector<std::vector<PatternPlan>> edge_plans_;
  std::vector<PatternPlan> full_plans_;
  std::vector<std::vector<int>> perms_;
  std::atomic<Count> incumbent_{std::numeric_limits<Count>::min()};
  std::atomic<bool> stopped_{false};
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

inline constexpr Count kMaskSlotLimit = 64;

inline SearchResult search_extremal(const SearchProblem& p, const SearchOptions& o = {}) {
  if (p.k < 2) throw input_error("uniformity must be at least 2");
  if (p.n < 0) throw input_error("vertex count must be nonnegative");
  for (const auto& f : p.family)
    if (f.k() != p.k) throw input_error("family member has uniformity " + std::to_string(f.k()) + ", problem has " + std::to_string(p.k));
  const Count slots = binomial(p.n, p.k);
  if (slots > kMaskSlotLimit)
    throw search_refused("C(" + std::to_string(p.n) + "," + std::to_string(p.k) + ") = " + std::to_string(slots) +
                         " edge slots exceeds the hard limit of " + std::to_string(kMaskSlotLimit));
  if (slots > o.slot_limit && !o.bounded)
    throw search_refused("C(" + std::to_string(p.n) + "," + std::to_string(p.k) + ") = " + std::to_string(slots) + " edge slots exceeds the exhaustive limit of " +
                         std::to_string(o.slot_limit) + "; rerun with --bounded for a best-found answer");
  if (p.mode == EmbedMode::subgraph)
    for (const auto& f : p.family)
      if (f.num_edges() == 0 && f.n() <= p.n) {
        SearchResult r;
        r.feasible = false;
        r.notes.push_back("an edgeless family member embeds in every graph on " + std::to_string(p.n) + " vertices");
        return r;
      }
  detail::ExtremalSearch s(p, o);
  auto r = s.run();
  bool small = !p.family.empty();
  for (const auto& f : p.family) small = small && f.n() > p.n;
  if (small) r.notes.push_back("every family member has more than n vertices; the complete graph is optimal");
  return r;
}

}  // namespace co2lab
