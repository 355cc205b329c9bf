#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "co2lab/catalog.hpp"
#include "co2lab/measures.hpp"

namespace co2lab {

// How far a scaled density may sit from the target at vertex count n.
struct Slack {
  enum class Kind { inverse_n, absolute, relative } kind = Kind::inverse_n;
  double c = 10.0;

  double allowed(int n, double target) const {
    switch (kind) {
      case Kind::inverse_n: return c / n;
      case Kind::absolute: return c;
      case Kind::relative: return c * std::abs(target);
    }
    return 0;
  }
  std::string describe() const {
    switch (kind) {
      case Kind::inverse_n: return "|d - v| <= " + std::to_string(static_cast<int>(c)) + "/n";
      case Kind::absolute: return "|d - v| <= " + std::to_string(c).substr(0, 4);
      case Kind::relative: return "|d - v| <= " + std::to_string(static_cast<int>(c * 100)) + "% of v";
    }
    return "";
  }
};

struct Table1Spec {
  std::string id;      // short key for --rows
  std::string target;  // forbidden family
  std::string family;  // construction
  Params params;
  std::optional<Rational> value_exact;  // published lower bound
  double value = 0;
  std::vector<int> ns;
  Slack slack;
  std::string upper;  // published flag-algebra upper bound, not reproduced
};

struct Table1Point {
  int n = 0;
  Count edges = 0;
  Count co2 = 0;
  Rational density;
  double deviation = 0;
  double allowed = 0;
  bool pass = false;
};

struct Table1Row {
  Table1Spec spec;
  std::vector<Table1Point> points;
  bool pass = false;
  std::string note;
};

inline constexpr const char* kUpperBoundLabel = "published flag-algebra bounds, not reproduced";

inline const std::vector<Table1Spec>& table1_specs() {
  using K = Slack::Kind;
  auto r = [](Count a, Count b) { return std::optional<Rational>(Rational(a, b)); };
  static const std::vector<Table1Spec> specs = {
      {"K4", "K4_3", "c_n", {}, r(1, 3), 1.0 / 3, {60, 120, 240}, {K::inverse_n, 10}, "1/3"},
      {"K5", "K5_3", "b_n", {}, r(5, 8), 5.0 / 8, {60, 120, 240}, {K::inverse_n, 10}, "5/8"},
      {"K6", "K6_3", "g6", {{"a", "0.4125"}}, std::nullopt, 0.7348, {400, 800}, {K::relative, 0.01}, "0.7536"},
      {"F32", "F3_2", "f32_bipartite", {}, r(1, 4), 0.25, {60, 120, 240}, {K::inverse_n, 10}, "1/4 + 1e-9"},
      {"F33", "F3_3", "b_n", {}, r(5, 8), 5.0 / 8, {60, 120, 240}, {K::inverse_n, 10}, "5/8"},
      {"F5", "F5", "s_n", {}, r(2, 27), 2.0 / 27, {60, 120, 240}, {K::inverse_n, 10}, "2/27"},
      {"Fano", "Fano", "b_n", {}, r(5, 8), 5.0 / 8, {60, 120, 240}, {K::inverse_n, 10}, "3/4"},
      {"K4-", "K4_3_minus", "iterated_s6", {}, r(4, 43), 4.0 / 43, {36, 216}, {K::absolute, 0.02}, "0.09307"},
      {"K4-F32C5", "K4_3_minus, F3_2, C5_tight", "s_n", {}, r(2, 27), 2.0 / 27, {60, 120, 240}, {K::inverse_n, 10}, "2/27"},
      {"K4-F32", "K4_3_minus, F3_2", "blowup", {{"base", "S6"}}, r(5, 54), 5.0 / 54, {60, 120, 240}, {K::inverse_n, 10}, "5/54"},
      {"K4-C5", "K4_3_minus, C5_tight", "iterated_edge", {}, r(1, 13), 1.0 / 13, {81, 243}, {K::absolute, 0.02}, "0.07695"},
      {"F32J4", "F3_2, J4", "blowup", {{"base", "K4_3"}}, r(3, 16), 3.0 / 16, {60, 120, 240}, {K::inverse_n, 10}, "3/16"},
      {"F32J5", "F3_2, J5", "blowup", {{"base", "K4_3"}}, r(3, 16), 3.0 / 16, {60, 120, 240}, {K::inverse_n, 10}, "3/16"},
      {"J4", "J4", "iterated_fano_complement", {}, r(7, 25), 0.28, {49, 343}, {K::absolute, 0.02}, "0.2808"},
      {"J5", "J5", "iterated_fano_complement", {}, r(7, 25), 0.28, {49, 343}, {K::absolute, 0.02}, "0.44275"},
      {"C5", "C5_tight", "c5_iterated", {}, std::nullopt, 0.25194, {120, 240}, {K::inverse_n, 10}, "0.25311"},
      {"C5-", "C5_minus", "iterated_edge", {}, r(1, 13), 1.0 / 13, {81, 243}, {K::absolute, 0.02}, "0.07726"},
      {"K5<", "K5_lt", "c_n", {}, r(1, 3), 1.0 / 3, {60, 120, 240}, {K::inverse_n, 10}, "0.34022"},
  };
  return specs;
}

// Rows named in the default acceptance subset.
inline std::vector<std::string> table1_core_rows() { return {"K4", "K5", "F33", "F5", "K4-F32", "F32J4"}; }

// Builds each construction at each n (capped by nmax) and scores the scaled density.
inline Table1Row table1_row(const Table1Spec& spec, int nmax = 0) {
  Table1Row row;
  row.spec = spec;
  for (int n : spec.ns) {
    if (nmax > 0 && n > nmax) continue;
    const auto c = construction(spec.family, n, spec.params);
    Table1Point p;
    p.n = n;
    p.edges = c.num_edges();
    p.co2 = c.co2();
    p.density = scaled_density(c.k, n, p.co2);
    p.deviation = std::abs(to_double(p.density) - spec.value);
    p.allowed = spec.slack.allowed(n, spec.value);
    p.pass = p.deviation <= p.allowed;
    row.points.push_back(p);
  }
  if (row.points.empty()) {
    row.note = "no configured n within --nmax";
    return row;
  }
  row.pass = std::all_of(row.points.begin(), row.points.end(), [](const Table1Point& p) { return p.pass; });
  return row;
}

inline std::vector<Table1Row> table1(const std::vector<std::string>& ids = {}, int nmax = 0) {
  std::vector<Table1Row> rows;
  for (const auto& s : table1_specs())
    if (ids.empty() || std::find(ids.begin(), ids.end(), s.id) != ids.end()) rows.push_back(table1_row(s, nmax));
  for (const auto& id : ids) {
    const auto& specs = table1_specs();
    if (std::none_of(specs.begin(), specs.end(), [&](const Table1Spec& s) { return s.id == id; }))
      throw registry_error("unknown table row '" + id + "'");
  }
  return rows;
}

}  // namespace co2lab
