#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace co2lab {

// Bad arguments: out-of-range vertices, non-partitions, edges not in the graph.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input. line() is 1-based.
class parse_error : public input_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class unsupported_uniformity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unknown catalog name or family.
class registry_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A search that exceeds its configured limits and was not asked to run bounded.
class search_refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace co2lab
