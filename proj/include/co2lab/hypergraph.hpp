#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "co2lab/combinatorics.hpp"
#include "co2lab/error.hpp"

namespace co2lab {

// Immutable k-uniform hypergraph on vertices 0..n-1.
// Edges are stored ascending, and the edge list is sorted lexicographically.
// Copies share storage.
class Hypergraph {
 public:
  Hypergraph() : Hypergraph(2, 0) {}
  Hypergraph(int k, int n) : Hypergraph(k, n, std::vector<Vertex>{}, trusted{}) {}
  // Throws input_error on out-of-range or repeated vertices and on duplicate edges.
  Hypergraph(int k, int n, const std::vector<std::vector<Vertex>>& edges);

  int k() const noexcept { return d_->k; }
  int n() const noexcept { return d_->n; }
  std::size_t num_edges() const noexcept { return d_->m; }
  bool empty() const noexcept { return d_->m == 0; }

  std::span<const Vertex> edge(std::size_t i) const {
    return {d_->flat.data() + i * static_cast<std::size_t>(d_->k), static_cast<std::size_t>(d_->k)};
  }
  const std::vector<Vertex>& flat_edges() const noexcept { return d_->flat; }
  std::vector<std::vector<Vertex>> edge_list() const;

  // Vertices in any order; false for invalid vertex sets.
  bool has_edge(std::span<const Vertex> vertices) const;
  bool has_edge(std::initializer_list<Vertex> vertices) const {
    return has_edge(std::span<const Vertex>(vertices.begin(), vertices.size()));
  }
  // Trusted fast path: exactly k ascending in-range vertices.
  bool has_sorted_edge(const Vertex* sorted) const;
  std::optional<std::size_t> edge_index(std::span<const Vertex> vertices) const;

  // Indices of edges containing v, ascending.
  std::span<const std::uint32_t> incident(Vertex v) const {
    const auto b = d_->inc_off[static_cast<std::size_t>(v)], e = d_->inc_off[static_cast<std::size_t>(v) + 1];
    return {d_->inc.data() + b, e - b};
  }
  Count degree(Vertex v) const { return static_cast<Count>(incident(v).size()); }

  // Vertex bit masks; only valid when n <= 64.
  bool has_masks() const noexcept { return d_->n <= 64; }
  std::uint64_t edge_mask(std::size_t i) const { return d_->masks[i]; }

  const BinomialTable& binomials() const noexcept { return d_->binom; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k() == b.k() && a.n() == b.n() && a.d_->flat == b.d_->flat;
  }

  // Edges must already be ascending, lexicographically sorted and unique.
  static Hypergraph from_sorted_flat(int k, int n, std::vector<Vertex> flat) {
    return Hypergraph(k, n, std::move(flat), trusted{});
  }

 private:
  struct trusted {};
  struct Data {
    int k = 2, n = 0;
    std::size_t m = 0;
    std::vector<Vertex> flat;
    std::vector<std::size_t> inc_off;
    std::vector<std::uint32_t> inc;
    std::vector<std::uint64_t> masks;
    std::vector<std::uint64_t> bitmap;  // colex-rank presence bits, when C(n,k) is small enough
    BinomialTable binom;
  };

  Hypergraph(int k, int n, std::vector<Vertex> flat, trusted);
  bool lex_find(const Vertex* sorted, std::size_t& pos) const;

  std::shared_ptr<const Data> d_;
};

namespace detail {

inline void check_shape(int k, int n) {
  if (k < 1) throw input_error("uniformity must be at least 1");
  if (n < 0) throw input_error("vertex count must be nonnegative");
}

inline bool lex_less(const Vertex* a, const Vertex* b, int k) {
  return std::lexicographical_compare(a, a + k, b, b + k);
}

// Sorts the k-blocks of flat lexicographically; returns true when a duplicate block was found
// (duplicates are removed).
inline bool sort_blocks(std::vector<Vertex>& flat, int k) {
  const std::size_t m = k == 0 ? 0 : flat.size() / static_cast<std::size_t>(k);
  std::vector<std::uint32_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<std::uint32_t>(i);
  const Vertex* base = flat.data();
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return lex_less(base + a * static_cast<std::size_t>(k), base + b * static_cast<std::size_t>(k), k);
  });
  std::vector<Vertex> out;
  out.reserve(flat.size());
  bool dup = false;
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex* e = base + order[i] * static_cast<std::size_t>(k);
    if (i > 0 && std::equal(e, e + k, out.end() - k)) {
      dup = true;
      continue;
    }
    out.insert(out.end(), e, e + k);
  }
  flat = std::move(out);
  return dup;
}

inline constexpr Count kBitmapSlotLimit = Count{1} << 28;

}  // namespace detail

inline Hypergraph::Hypergraph(int k, int n, std::vector<Vertex> flat, trusted) {
  detail::check_shape(k, n);
  auto d = std::make_shared<Data>();
  d->k = k;
  d->n = n;
  d->m = flat.size() / static_cast<std::size_t>(k);
  d->flat = std::move(flat);
  d->binom = BinomialTable(n, k);

  d->inc_off.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : d->flat) ++d->inc_off[static_cast<std::size_t>(v) + 1];
  for (std::size_t i = 1; i < d->inc_off.size(); ++i) d->inc_off[i] += d->inc_off[i - 1];
  d->inc.resize(d->flat.size());
  std::vector<std::size_t> fill(d->inc_off.begin(), d->inc_off.end() - 1);
  for (std::size_t e = 0; e < d->m; ++e)
    for (int j = 0; j < k; ++j) d->inc[fill[static_cast<std::size_t>(d->flat[e * k + j])]++] = static_cast<std::uint32_t>(e);

  if (n <= 64) {
    d->masks.resize(d->m);
    for (std::size_t e = 0; e < d->m; ++e) {
      std::uint64_t mk = 0;
      for (int j = 0; j < k; ++j) mk |= std::uint64_t{1} << d->flat[e * k + j];
      d->masks[e] = mk;
    }
  }
  Count slots = 0;
  try {
    slots = binomial(n, k);
  } catch (const std::overflow_error&) {
    slots = detail::kBitmapSlotLimit + 1;
  }
  if (slots <= detail::kBitmapSlotLimit && d->m > 0) {
    d->bitmap.assign(static_cast<std::size_t>(slots / 64 + 1), 0);
    for (std::size_t e = 0; e < d->m; ++e) {
      const auto r = static_cast<std::uint64_t>(d->binom.rank(d->flat.data() + e * k, k));
      d->bitmap[r >> 6] |= std::uint64_t{1} << (r & 63);
    }
  }
  d_ = std::move(d);
}

inline Hypergraph::Hypergraph(int k, int n, const std::vector<std::vector<Vertex>>& edges) {
  detail::check_shape(k, n);
  std::vector<Vertex> flat;
  flat.reserve(edges.size() * static_cast<std::size_t>(k));
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != k)
      throw input_error("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(k));
    std::vector<Vertex> s = e;
    std::sort(s.begin(), s.end());
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] < 0 || s[j] >= n) throw input_error("vertex " + std::to_string(s[j]) + " out of range");
      if (j > 0 && s[j] == s[j - 1]) throw input_error("repeated vertex " + std::to_string(s[j]) + " in edge");
    }
    flat.insert(flat.end(), s.begin(), s.end());
  }
  if (detail::sort_blocks(flat, k)) throw input_error("duplicate edge");
  *this = Hypergraph(k, n, std::move(flat), trusted{});
}

inline std::vector<std::vector<Vertex>> Hypergraph::edge_list() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(num_edges());
  for (std::size_t i = 0; i < num_edges(); ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

inline bool Hypergraph::lex_find(const Vertex* sorted, std::size_t& pos) const {
  const int k = d_->k;
  std::size_t lo = 0, hi = d_->m;
  const Vertex* base = d_->flat.data();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (detail::lex_less(base + mid * k, sorted, k))
      lo = mid + 1;
    else
      hi = mid;
  }
  pos = lo;
  return lo < d_->m && std::equal(sorted, sorted + k, base + lo * k);
}

inline bool Hypergraph::has_sorted_edge(const Vertex* sorted) const {
  if (d_->m == 0) return false;
  if (!d_->bitmap.empty()) {
    const auto r = static_cast<std::uint64_t>(d_->binom.rank(sorted, d_->k));
    return (d_->bitmap[r >> 6] >> (r & 63)) & 1U;
  }
  std::size_t pos;
  return lex_find(sorted, pos);
}

inline bool Hypergraph::has_edge(std::span<const Vertex> vertices) const {
  if (static_cast<int>(vertices.size()) != d_->k) return false;
  std::vector<Vertex> s(vertices.begin(), vertices.end());
  std::sort(s.begin(), s.end());
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s[j] < 0 || s[j] >= d_->n || (j > 0 && s[j] == s[j - 1])) return false;
  return has_sorted_edge(s.data());
}

inline std::optional<std::size_t> Hypergraph::edge_index(std::span<const Vertex> vertices) const {
  if (static_cast<int>(vertices.size()) != d_->k) return std::nullopt;
  std::vector<Vertex> s(vertices.begin(), vertices.end());
  std::sort(s.begin(), s.end());
  std::size_t pos;
  if (lex_find(s.data(), pos)) return pos;
  return std::nullopt;
}

// Accumulates edges; build() merges duplicates, build_strict() rejects them.
class HypergraphBuilder {
 public:
  HypergraphBuilder(int k, int n) : k_(k), n_(n) { detail::check_shape(k, n); }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }

  HypergraphBuilder& add(std::span<const Vertex> e) {
    if (static_cast<int>(e.size()) != k_)
      throw input_error("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(k_));
    const std::size_t at = flat_.size();
    flat_.insert(flat_.end(), e.begin(), e.end());
    std::sort(flat_.begin() + static_cast<std::ptrdiff_t>(at), flat_.end());
    for (std::size_t j = at; j < flat_.size(); ++j) {
      if (flat_[j] < 0 || flat_[j] >= n_) {
        const Vertex bad = flat_[j];
        flat_.resize(at);
        throw input_error("vertex " + std::to_string(bad) + " out of range");
      }
      if (j > at && flat_[j] == flat_[j - 1]) {
        const Vertex bad = flat_[j];
        flat_.resize(at);
        throw input_error("repeated vertex " + std::to_string(bad) + " in edge");
      }
    }
    return *this;
  }
  HypergraphBuilder& add(std::initializer_list<Vertex> e) { return add(std::span<const Vertex>(e.begin(), e.size())); }
  void reserve(std::size_t edges) { flat_.reserve(edges * static_cast<std::size_t>(k_)); }
  std::size_t pending() const noexcept { return flat_.size() / static_cast<std::size_t>(k_); }

  Hypergraph build() && {
    detail::sort_blocks(flat_, k_);
    return Hypergraph::from_sorted_flat(k_, n_, std::move(flat_));
  }
  Hypergraph build_strict() && {
    if (detail::sort_blocks(flat_, k_)) throw input_error("duplicate edge");
    return Hypergraph::from_sorted_flat(k_, n_, std::move(flat_));
  }

 private:
  int k_, n_;
  std::vector<Vertex> flat_;
};

// Ordered list of disjoint vertex sets covering 0..n-1.
class VertexPartition {
 public:
  VertexPartition() = default;
  VertexPartition(int n, std::vector<std::vector<Vertex>> parts) : parts_(std::move(parts)), part_of_(static_cast<std::size_t>(n), -1) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      std::sort(parts_[p].begin(), parts_[p].end());
      for (Vertex v : parts_[p]) {
        if (v < 0 || v >= n) throw input_error("partition vertex " + std::to_string(v) + " out of range");
        if (part_of_[static_cast<std::size_t>(v)] != -1) throw input_error("partition parts overlap at vertex " + std::to_string(v));
        part_of_[static_cast<std::size_t>(v)] = static_cast<int>(p);
      }
    }
    for (std::size_t v = 0; v < part_of_.size(); ++v)
      if (part_of_[v] == -1) throw input_error("partition misses vertex " + std::to_string(v));
  }

  // Consecutive index ranges of the given sizes.
  static VertexPartition consecutive(const std::vector<int>& sizes) {
    std::vector<std::vector<Vertex>> parts;
    Vertex next = 0;
    for (int s : sizes) {
      if (s < 0) throw input_error("negative part size");
      std::vector<Vertex> p;
      for (int i = 0; i < s; ++i) p.push_back(next++);
      parts.push_back(std::move(p));
    }
    return VertexPartition(next, std::move(parts));
  }

  std::size_t size() const noexcept { return parts_.size(); }
  int order() const noexcept { return static_cast<int>(part_of_.size()); }
  const std::vector<Vertex>& part(std::size_t i) const { return parts_[i]; }
  int part_of(Vertex v) const { return part_of_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<std::vector<Vertex>> parts_;
  std::vector<int> part_of_;
};

// Sizes of r parts of a set of n: floor(n/r) each, remainder to the earliest parts.
inline std::vector<int> balanced_sizes(int n, int r) {
  if (r <= 0) throw input_error("part count must be positive");
  if (n < 0) throw input_error("vertex count must be nonnegative");
  std::vector<int> s(static_cast<std::size_t>(r), n / r);
  for (int i = 0; i < n % r; ++i) ++s[static_cast<std::size_t>(i)];
  return s;
}

}  // namespace co2lab
