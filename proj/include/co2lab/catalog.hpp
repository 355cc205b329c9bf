#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "co2lab/combinatorics.hpp"
#include "co2lab/error.hpp"
#include "co2lab/families.hpp"
#include "co2lab/hypergraph.hpp"
#include "co2lab/measures.hpp"
#include "co2lab/named.hpp"

namespace co2lab {

using Params = std::map<std::string, std::string, std::less<>>;

struct FamilyInfo {
  std::string name;
  std::string params;
  std::string description;
  bool randomized = false;
  bool has_generator = true;
  std::string note;
};

inline const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> f{
      {"s_n", "n", "complete 3-partite 3-graph, parts floor(n/3), floor((n+1)/3), floor((n+2)/3)", false, true, {}},
      {"b_n", "n", "complete bipartite 3-graph: triples meeting both halves", false, true, {}},
      {"c_n", "n", "three balanced parts: transversals and 2+1 triples along P0->P1->P2->P0", false, true, {}},
      {"h5", "n", "four balanced parts, non-edges inside a part or 2 in P_j + 1 in P_{j+1}", false, true, {}},
      {"h6_five_part", "n", "five balanced parts, non-edges inside a part or 2 in P_j + 1 in P_{j+1}", false, true, {}},
      {"g6", "n, a=0.412498", "class A of round(a n) vertices plus c_n on the balanced rest, all triples meeting A in 1 or 2", false, true, {}},
      {"blowup", "base, t (n = t |V(base)|)", "each base vertex replaced by t clones", false, true, {}},
      {"iterated_blowup", "n, base", "balanced blow-up of base, repeated inside every class", false, true, {}},
      {"iterated_s6", "n", "iterated blow-up of S6", false, true, {}},
      {"iterated_edge", "n", "iterated blow-up of a single edge", false, true, {}},
      {"iterated_fano_complement", "n", "iterated blow-up of the Fano complement", false, true, {}},
      {"g_star", "n, s", "all triples meeting the first s-1 vertices", false, true, {}},
      {"star_vertex", "n", "all triples through vertex 0", false, true, {}},
      {"f_o", "n, s", "parts A, B of size s and C: triples with >= 2 in one of A, B and none in the other", false, true, {}},
      {"f_e", "n, s", "auxiliary-graph construction on 2s-1 vertices", false, true, {}},
      {"f32_bipartite", "n, v1=ceil(sqrt(1/2) n)", "two vertices in V1 and one in V2", false, true, {}},
      {"c5_iterated", "n, b=0.7", "pair class of size round(b m), one-vertex class recursed", false, true, {}},
      {"tournament_gt", "n, seed", "random tournament, ijk edge iff ij and ik oppositely directed", true, true, {}},
      {"tournament_ct", "n, seed", "cyclic triangles of a random tournament", true, true, {}},
      {"falgas_ravry", "n, s, seed", "random s-colouring of pairs, ijk edge iff c(ij) != c(ik)", true, true, {}},
      {"giraud", "n (even), seed", "4-graph on rows and columns of a random 0/1 matrix", true, true, {}},
      {"parity_triangle", "n, k", "2k-graph on two halves, sets meeting each half oddly", false, true, {}},
      {"gunderson_semeraro", "n (4 | n)", "K5^4= extremal design", false, false,
       "no generator: only the claimed measures are recorded (edges n/16 C(n,3), co2 n^2/16 C(n,3) for 4 | n)"},
  };
  return f;
}

namespace detail {

inline const std::string* find_param(const Params& p, std::string_view key) {
  auto it = p.find(key);
  return it == p.end() ? nullptr : &it->second;
}

inline long long param_int(const Params& p, std::string_view key, std::optional<long long> def = std::nullopt) {
  const auto* v = find_param(p, key);
  if (v == nullptr) {
    if (def) return *def;
    throw input_error("missing parameter '" + std::string(key) + "'");
  }
  try {
    std::size_t used = 0;
    const long long x = std::stoll(*v, &used, 0);
    if (used != v->size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw input_error("parameter '" + std::string(key) + "' is not an integer: " + *v);
  }
}

inline double param_double(const Params& p, std::string_view key, double def) {
  const auto* v = find_param(p, key);
  if (v == nullptr) return def;
  try {
    std::size_t used = 0;
    const double x = std::stod(*v, &used);
    if (used != v->size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw input_error("parameter '" + std::string(key) + "' is not a number: " + *v);
  }
}

inline std::uint64_t param_seed(const Params& p) {
  const auto* v = find_param(p, "seed");
  if (v == nullptr) throw input_error("randomized family needs a seed");
  try {
    std::size_t used = 0;
    const auto x = std::stoull(*v, &used, 0);
    if (used != v->size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw input_error("seed is not an unsigned integer: " + *v);
  }
}

inline int as_int(long long x, const char* what) {
  if (x < INT32_MIN || x > INT32_MAX) throw input_error(std::string(what) + " out of range");
  return static_cast<int>(x);
}

}  // namespace detail

// Builds the named construction. n < 0 lets blowup derive n from t.
inline Construction construction(std::string_view family, int n, const Params& p = {}) {
  using namespace families;
  auto need_n = [&] {
    if (n < 0) throw input_error(std::string(family) + " needs n");
  };
  if (family == "s_n") return need_n(), s_n(n);
  if (family == "b_n") return need_n(), b_n(n);
  if (family == "c_n") return need_n(), c_n(n);
  if (family == "h5") return need_n(), h5(n);
  if (family == "h6_five_part") return need_n(), h6_five_part(n);
  if (family == "g6") return need_n(), g6(n, detail::param_double(p, "a", kG6DefaultA));
  if (family == "blowup") {
    const auto* base_name = detail::find_param(p, "base");
    if (base_name == nullptr) throw input_error("blowup needs a base graph name");
    const Hypergraph base = named(*base_name);
    int t;
    if (detail::find_param(p, "t") != nullptr) {
      t = detail::as_int(detail::param_int(p, "t"), "t");
      if (n >= 0 && n != t * base.n()) throw input_error("blowup: n must equal t |V(base)|");
    } else {
      need_n();
      if (base.n() == 0 || n % base.n() != 0) throw input_error("blowup: n must be a multiple of |V(base)|");
      t = n / base.n();
    }
    return blowup(base, t, *base_name);
  }
  if (family == "iterated_blowup") {
    need_n();
    const auto* base_name = detail::find_param(p, "base");
    if (base_name == nullptr) throw input_error("iterated_blowup needs a base graph name");
    return iterated_blowup(named(*base_name), n, *base_name);
  }
  if (family == "iterated_s6") {
    need_n();
    auto c = iterated_blowup(named("S6"), n, "S6");
    c.family = "iterated_s6";
    return c;
  }
  if (family == "iterated_edge") {
    need_n();
    auto c = iterated_blowup(clique(3, 3), n, "K3_3");
    c.family = "iterated_edge";
    return c;
  }
  if (family == "iterated_fano_complement") {
    need_n();
    auto c = iterated_blowup(named("fano_complement"), n, "fano_complement");
    c.family = "iterated_fano_complement";
    return c;
  }
  if (family == "g_star") return need_n(), g_star(n, detail::as_int(detail::param_int(p, "s"), "s"));
  if (family == "star_vertex") return need_n(), star_vertex(n);
  if (family == "f_o") return need_n(), f_o(n, detail::as_int(detail::param_int(p, "s"), "s"));
  if (family == "f_e") return need_n(), f_e(n, detail::as_int(detail::param_int(p, "s"), "s"));
  if (family == "f32_bipartite") return need_n(), f32_bipartite(n, detail::as_int(detail::param_int(p, "v1", -1), "v1"));
  if (family == "c5_iterated") return need_n(), c5_iterated(n, detail::param_double(p, "b", 0.7));
  if (family == "tournament_gt") return need_n(), tournament_gt(n, detail::param_seed(p));
  if (family == "tournament_ct") return need_n(), tournament_ct(n, detail::param_seed(p));
  if (family == "falgas_ravry") return need_n(), falgas_ravry(n, detail::as_int(detail::param_int(p, "s"), "s"), detail::param_seed(p));
  if (family == "giraud") return need_n(), giraud(n, detail::param_seed(p));
  if (family == "parity_triangle") return need_n(), parity_triangle(n, detail::as_int(detail::param_int(p, "k", 2), "k"));
  if (family == "gunderson_semeraro") throw input_error("gunderson_semeraro has no generator; only its claimed measures are recorded");
  throw registry_error("unknown family '" + std::string(family) + "'");
}

inline Hypergraph construct(std::string_view family, int n, const Params& p = {}) { return construction(family, n, p).build(); }

enum class Measure { edges, co2 };

struct ClosedForm {
  bool exact = true;
  Count value = 0;      // exact value
  double approx = 0.0;  // leading-order value when not exact
  std::string formula;
  std::string validity;
  std::string slack;
};

// Exact counts for a digraph layout, from part sizes.
inline std::pair<Count, Count> digraph_edges_co2(const families::DigraphLayout& l) {
  const auto r = l.sizes.size();
  std::vector<char> arc(r * r, 0);
  for (auto [i, j] : l.arcs) arc[static_cast<std::size_t>(i) * r + static_cast<std::size_t>(j)] = 1;
  auto s = [&](std::size_t i) { return static_cast<Count>(l.sizes[i]); };
  Count edges = 0, c2 = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t q = j + 1; q < r; ++q) edges += s(i) * s(j) * s(q);
  for (std::size_t i = 0; i < r; ++i) {
    Count d = 0;
    for (std::size_t j = 0; j < r; ++j)
      if (j != i && !arc[i * r + j]) {
        edges += binomial(s(i), 2) * s(j);
        d += s(j);
      }
    c2 += binomial(s(i), 2) * d * d;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Count d = 0;
      for (std::size_t q = 0; q < r; ++q)
        if (q != i && q != j) d += s(q);
      if (!arc[i * r + j]) d += s(i) - 1;
      if (!arc[j * r + i]) d += s(j) - 1;
      c2 += s(i) * s(j) * d * d;
    }
  return {edges, c2};
}

// Limit of the scaled density for part fractions x_i (summing to 1).
inline double digraph_density(const std::vector<double>& x, const std::vector<std::pair<int, int>>& arcs) {
  const auto r = x.size();
  std::vector<char> arc(r * r, 0);
  for (auto [i, j] : arcs) arc[static_cast<std::size_t>(i) * r + static_cast<std::size_t>(j)] = 1;
  double c2 = 0;
  for (std::size_t i = 0; i < r; ++i) {
    double d = 0;
    for (std::size_t j = 0; j < r; ++j)
      if (j != i && !arc[i * r + j]) d += x[j];
    c2 += x[i] * x[i] / 2 * d * d;
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      double d = 0;
      for (std::size_t q = 0; q < r; ++q)
        if (q != i && q != j) d += x[q];
      if (!arc[i * r + j]) d += x[i];
      if (!arc[j * r + i]) d += x[j];
      c2 += x[i] * x[j] * d * d;
    }
  return 2 * c2;
}

struct DensityLimit {
  double value = 0.0;
  std::optional<Rational> exact;
  std::string formula;
  // Convergence model: |density(n) - value| <= slack_constant / n.
  double slack_constant = 10.0;
};

namespace detail {

inline std::optional<families::DigraphLayout> digraph_layout(std::string_view family, int n, const Params& p) {
  if (family == "c_n") return families::layout_c_n(n);
  if (family == "h5") return families::layout_h5(n);
  if (family == "h6_five_part") return families::layout_h6_five_part(n);
  if (family == "g6") return families::layout_g6(n, param_double(p, "a", families::kG6DefaultA));
  return std::nullopt;
}

// n^4 coefficient of co2 for an iterated balanced blow-up of a 3-graph base.
inline double iterated_coefficient(const Hypergraph& base) {
  const double v = base.n();
  return static_cast<double>(co2(base)) / (v * v * v * v - v);
}

}  // namespace detail

inline std::optional<DensityLimit> density_limit(std::string_view family, const Params& p = {}) {
  auto rat = [](Count a, Count b) {
    DensityLimit d;
    d.exact = Rational(a, b);
    d.value = to_double(*d.exact);
    return d;
  };
  if (family == "s_n") return [&] { auto d = rat(2, 27); d.formula = "2/27"; return d; }();
  if (family == "b_n") return [&] { auto d = rat(5, 8); d.formula = "5/8"; return d; }();
  if (family == "c_n") return [&] { auto d = rat(1, 3); d.formula = "1/3"; return d; }();
  if (family == "h5") {
    DensityLimit d;
    d.value = digraph_density({0.25, 0.25, 0.25, 0.25}, families::layout_h5(4).arcs);
    d.formula = "balanced four-part limit";
    return d;
  }
  if (family == "h6_five_part") {
    DensityLimit d;
    d.value = digraph_density(std::vector<double>(5, 0.2), families::layout_h6_five_part(5).arcs);
    d.formula = "balanced five-part limit";
    return d;
  }
  if (family == "g6") {
    const double a = detail::param_double(p, "a", families::kG6DefaultA);
    DensityLimit d;
    const double b = (1 - a) / 3;
    d.value = digraph_density({a, b, b, b}, families::layout_g6(1, a).arcs);
    d.formula = "2 (a^2 (1-a)^2 / 2 + 3ab + 3 b^2/2 (a+b)^2 + 3 b^2 (a+2b)^2), b = (1-a)/3";
    return d;
  }
  if (family == "blowup" || family == "iterated_blowup") {
    const auto* base_name = detail::find_param(p, "base");
    if (base_name == nullptr) return std::nullopt;
    const Hypergraph base = named(*base_name);
    if (base.k() != 3) return std::nullopt;
    const Count v = base.n();
    if (family == "blowup") {
      auto d = rat(2 * co2(base), v * v * v * v);
      d.formula = "2 co2(base) / v^4";
      return d;
    }
    auto d = rat(2 * co2(base), v * v * v * v - v);
    d.formula = "2 co2(base) / (v^4 - v)";
    return d;
  }
  if (family == "iterated_s6") return density_limit("iterated_blowup", {{"base", "S6"}});
  if (family == "iterated_edge") return density_limit("iterated_blowup", {{"base", "K3_3"}});
  if (family == "iterated_fano_complement") return density_limit("iterated_blowup", {{"base", "fano_complement"}});
  if (family == "f32_bipartite") {
    DensityLimit d;
    if (detail::find_param(p, "v1") == nullptr) {
      d = rat(1, 4);
      d.formula = "c^2 (1 - c^2) with c^2 = 1/2";
    } else {
      return std::nullopt;  // depends on the ratio v1/n
    }
    return d;
  }
  if (family == "c5_iterated") {
    const double b = detail::param_double(p, "b", 0.7);
    DensityLimit d;
    d.value = 2 * (b * b * (1 - b) * (1 - b) / 2 + b * (1 - b) * b * b) / (1 - std::pow(1 - b, 4));
    d.formula = "2 (b^2 (1-b)^2 / 2 + b^3 (1-b)) / (1 - (1-b)^4)";
    return d;
  }
  if (family == "giraud") return [&] { auto d = rat(31, 64); d.formula = "31/64"; return d; }();
  if (family == "star_vertex" || family == "g_star" || family == "f_o" || family == "f_e") {
    auto d = rat(0, 1);
    d.formula = "0 (co2 is O(n^3))";
    return d;
  }
  return std::nullopt;
}

// Exact value when a formula exists for this n, otherwise the leading-order value from the
// density limit.
inline std::optional<ClosedForm> closed_form(std::string_view family, int n, Measure m, const Params& p = {}) {
  if (n < 0) throw input_error("n must be nonnegative");
  const Count N = n;
  auto exact = [&](Count v, std::string formula, std::string validity) {
    return ClosedForm{true, v, static_cast<double>(v), std::move(formula), std::move(validity), "exact"};
  };
  if (family == "s_n") {
    const Count a = n / 3, b = (n + 1) / 3, c = (n + 2) / 3;
    if (m == Measure::edges) return exact(a * b * c, "|A||B||C|", "all n");
    return exact(a * b * c * N, "|A||B||C| n", "all n");
  }
  if (family == "b_n") {
    const Count a = (n + 1) / 2, b = n / 2;
    if (m == Measure::edges) return exact(binomial(N, 3) - binomial(a, 3) - binomial(b, 3), "C(n,3) - C(|A|,3) - C(|B|,3)", "all n");
    return exact(binomial(a, 2) * b * b + binomial(b, 2) * a * a + a * b * (N - 2) * (N - 2),
                 "C(|A|,2)|B|^2 + C(|B|,2)|A|^2 + |A||B|(n-2)^2", "n >= 2");
  }
  if (auto l = detail::digraph_layout(family, n, p)) {
    const auto [e, c] = digraph_edges_co2(*l);
    if (m == Measure::edges) return exact(e, "sum over part-size patterns", "all n");
    return exact(c, "sum over part-size patterns", "all n");
  }
  if (family == "star_vertex") {
    if (n < 1) return std::nullopt;
    if (m == Measure::edges) return exact(binomial(N - 1, 2), "C(n-1,2)", "n >= 1");
    return exact(binomial(N - 1, 2) * (2 * N - 3), "C(n-1,2)(2n-3)", "n >= 2");
  }
  if (family == "g_star") {
    const Count s = detail::param_int(p, "s");
    if (s < 2 || N < s - 1) return std::nullopt;
    if (m == Measure::edges) {
      Count e = 0;
      for (Count i = 1; i <= std::min<Count>(3, s - 1); ++i) e += binomial(s - 1, i) * binomial(N - s + 1, 3 - i);
      return exact(e, "sum_{i=1}^{min(3,s-1)} C(s-1,i) C(n-s+1,3-i)", "n >= s-1");
    }
    return exact(binomial(s - 1, 2) * (N - 2) * (N - 2) + (s - 1) * (N - s + 1) * (N - 2) * (N - 2) + binomial(N - s + 1, 2) * (s - 1) * (s - 1),
                 "C(s-1,2)(n-2)^2 + (s-1)(n-s+1)(n-2)^2 + C(n-s+1,2)(s-1)^2", "n >= s-1");
  }
  if (family == "f_o") {
    const Count s = detail::param_int(p, "s");
    if (s < 1 || N < 2 * s) return std::nullopt;
    if (m == Measure::edges) return exact(2 * (binomial(s, 3) + binomial(s, 2) * (N - 2 * s)), "2(C(s,3) + C(s,2)(n-2s))", "n >= 2s");
    return exact(2 * (binomial(s, 2) * (N - s - 2) * (N - s - 2) + s * (N - 2 * s) * (s - 1) * (s - 1)),
                 "2(C(s,2)(n-s-2)^2 + s(n-2s)(s-1)^2)", "n >= 2s");
  }
  if (family == "f32_bipartite") {
    const Count v1 = detail::find_param(p, "v1") ? detail::param_int(p, "v1") : static_cast<Count>(std::ceil(std::sqrt(0.5) * n));
    if (v1 > N) return std::nullopt;
    const Count v2 = N - v1;
    if (m == Measure::edges) return exact(binomial(v1, 2) * v2, "C(|V1|,2)|V2|", "all n");
    return exact(binomial(v1, 2) * v2 * v2 + v1 * v2 * (v1 - 1) * (v1 - 1), "C(|V1|,2)|V2|^2 + |V1||V2|(|V1|-1)^2", "all n");
  }
  if (family == "blowup") {
    const auto* base_name = detail::find_param(p, "base");
    if (base_name == nullptr) return std::nullopt;
    const Hypergraph base = named(*base_name);
    if (base.n() == 0 || n % base.n() != 0) return std::nullopt;
    const Count t = n / base.n();
    Count tk = 1;
    for (int i = 0; i < base.k(); ++i) tk *= t;
    if (m == Measure::edges) return exact(static_cast<Count>(base.num_edges()) * tk, "|E(base)| t^k", "n = t |V(base)|");
    return exact(co2(base) * tk * t, "co2(base) t^(k+1)", "n = t |V(base)|");
  }
  if (m == Measure::co2) {
    auto lim = density_limit(family, p);
    if (!lim) return std::nullopt;
    const int k = family == "giraud" ? 4 : 3;
    if (n < k) return std::nullopt;
    const double norm = static_cast<double>(binomial(N, k - 1)) * static_cast<double>((N - k + 1) * (N - k + 1));
    ClosedForm f;
    f.exact = false;
    f.approx = lim->value * norm;
    f.formula = lim->formula + " times C(n,k-1)(n-k+1)^2";
    f.validity = "asymptotic";
    f.slack = "scaled density within " + std::to_string(static_cast<int>(lim->slack_constant)) + "/n of the limit";
    return f;
  }
  return std::nullopt;
}

}  // namespace co2lab
