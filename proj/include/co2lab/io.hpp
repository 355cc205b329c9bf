#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "co2lab/error.hpp"
#include "co2lab/hypergraph.hpp"

namespace co2lab {

// Text format:
//   k n
//   v1 v2 ... vk      one edge per line, ascending
// '#' starts a comment; blank lines are skipped.

namespace detail {

inline std::vector<long long> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long v = 0;
    const auto tok = line.substr(i, j - i);
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw parse_error(lineno, "not an integer: '" + std::string(tok) + "'");
    out.push_back(v);
    i = j;
  }
  return out;
}

}  // namespace detail

inline Hypergraph read_hypergraph(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  int k = 0, n = 0;
  std::vector<Vertex> flat;
  std::vector<std::size_t> lines;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line(raw);
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    const auto vals = detail::parse_ints(line, lineno);
    if (vals.empty()) continue;
    if (!have_header) {
      if (vals.size() != 2) throw parse_error(lineno, "header must be 'k n'");
      if (vals[0] < 1 || vals[0] > 64) throw parse_error(lineno, "uniformity out of range");
      if (vals[1] < 0 || vals[1] > (1 << 24)) throw parse_error(lineno, "vertex count out of range");
      k = static_cast<int>(vals[0]);
      n = static_cast<int>(vals[1]);
      have_header = true;
      continue;
    }
    if (static_cast<int>(vals.size()) != k)
      throw parse_error(lineno, "edge has " + std::to_string(vals.size()) + " vertices, expected " + std::to_string(k));
    for (std::size_t j = 0; j < vals.size(); ++j) {
      if (vals[j] < 0 || vals[j] >= n) throw parse_error(lineno, "vertex " + std::to_string(vals[j]) + " out of range");
      if (j > 0 && vals[j] <= vals[j - 1]) throw parse_error(lineno, "edge vertices must be strictly ascending");
      flat.push_back(static_cast<Vertex>(vals[j]));
    }
    lines.push_back(lineno);
  }
  if (!have_header) throw parse_error(lineno == 0 ? 1 : lineno, "missing 'k n' header");

  const std::size_t m = lines.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto uk = static_cast<std::size_t>(k);
  auto at = [&](std::size_t e) { return flat.data() + e * uk; };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return detail::lex_less(at(a), at(b), k); });
  for (std::size_t i = 1; i < m; ++i)
    if (std::equal(at(order[i]), at(order[i]) + k, at(order[i - 1]))) {
      throw parse_error(std::max(lines[order[i]], lines[order[i - 1]]), "duplicate edge");
    }
  std::vector<Vertex> sorted;
  sorted.reserve(flat.size());
  for (auto e : order) sorted.insert(sorted.end(), at(e), at(e) + k);
  return Hypergraph::from_sorted_flat(k, n, std::move(sorted));
}

inline Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_hypergraph(in);
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& g) {
  out << g.k() << ' ' << g.n() << '\n';
  std::string line;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    line.clear();
    for (Vertex v : g.edge(i)) {
      if (!line.empty()) line.push_back(' ');
      line += std::to_string(v);
    }
    line.push_back('\n');
    out << line;
  }
}

inline std::string to_text(const Hypergraph& g) {
  std::ostringstream s;
  write_hypergraph(s, g);
  return s.str();
}

}  // namespace co2lab
