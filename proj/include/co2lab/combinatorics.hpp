#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace co2lab {

using Vertex = int;
using Count = std::int64_t;

// C(n, r); 0 outside 0 <= r <= n. Throws std::overflow_error past int64.
constexpr Count binomial(Count n, Count r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  __int128 acc = 1;
  for (Count i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > INT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<Count>(acc);
}

// Colex rank of an ascending vertex list: sum of C(v_i, i+1).
inline Count colex_rank(std::span<const Vertex> sorted) {
  Count r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += binomial(sorted[i], static_cast<Count>(i + 1));
  return r;
}

// Inverse of colex_rank for r-subsets.
inline std::vector<Vertex> colex_unrank(Count rank, int r) {
  std::vector<Vertex> out(static_cast<std::size_t>(r));
  for (int i = r; i >= 1; --i) {
    Vertex v = i - 1;
    while (binomial(v + 1, i) <= rank) ++v;
    out[static_cast<std::size_t>(i - 1)] = v;
    rank -= binomial(v, i);
  }
  return out;
}

// Table of C(v, i) for v < n, i <= r; avoids recomputation in hot loops.
class BinomialTable {
 public:
  BinomialTable() = default;
  BinomialTable(int n, int r) : n_(n), r_(r), t_(static_cast<std::size_t>((n + 1) * (r + 1)), 0) {
    for (int v = 0; v <= n; ++v)
      for (int i = 0; i <= r; ++i) t_[idx(v, i)] = binomial(v, i);
  }
  Count operator()(int v, int i) const { return t_[idx(v, i)]; }
  Count rank(const Vertex* sorted, int len) const {
    Count acc = 0;
    for (int i = 0; i < len; ++i) acc += t_[idx(sorted[i], i + 1)];
    return acc;
  }

 private:
  std::size_t idx(int v, int i) const { return static_cast<std::size_t>(v * (r_ + 1) + i); }
  int n_ = 0, r_ = 0;
  std::vector<Count> t_;
};

// Calls f(std::span<const Vertex>) for every r-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int r, F&& f) {
  if (r < 0 || r > n) return;
  std::vector<Vertex> s(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) s[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(std::span<const Vertex>(s));
    int i = r - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Calls f(std::span<const Vertex>) for every r-subset of the given ascending list.
template <class F>
void for_each_subset_of(std::span<const Vertex> base, int r, F&& f) {
  const int m = static_cast<int>(base.size());
  if (r < 0 || r > m) return;
  std::vector<Vertex> out(static_cast<std::size_t>(r));
  for_each_subset(m, r, [&](std::span<const Vertex> idx) {
    for (int i = 0; i < r; ++i) out[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    f(std::span<const Vertex>(out));
  });
}

}  // namespace co2lab
