#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "co2lab/combinatorics.hpp"
#include "co2lab/error.hpp"
#include "co2lab/hypergraph.hpp"

namespace co2lab {

// Recorded in output metadata so seeded runs can be replayed.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/splitmix64-v1";

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Deterministic across platforms: bounded draws use our own rejection sampling
// rather than std distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream), eng_(splitmix64(seed ^ splitmix64(stream + 0x632BE59BD9B4E019ULL))) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return eng_(); }
  bool coin() { return (eng_() >> 63) != 0; }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw input_error("empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return x % bound;
  }
  int uniform_int(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  // True with probability num/den.
  bool bernoulli(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  // Independent child stream.
  Rng split(std::uint64_t child) const { return Rng(splitmix64(seed_ ^ splitmix64(stream_)), child); }

 private:
  std::uint64_t seed_, stream_;
  std::mt19937_64 eng_;
};

// CO2LAB_SEED if set and numeric, else nullopt.
inline std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("CO2LAB_SEED");
  if (s == nullptr || *s == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (used != std::string(s).size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Binomial random k-graph: each k-subset is an edge with probability num/den.
inline Hypergraph random_hypergraph(int k, int n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  std::vector<Vertex> flat;
  for_each_subset(n, k, [&](std::span<const Vertex> s) {
    if (rng.bernoulli(num, den)) flat.insert(flat.end(), s.begin(), s.end());
  });
  return Hypergraph::from_sorted_flat(k, n, std::move(flat));
}

}  // namespace co2lab
