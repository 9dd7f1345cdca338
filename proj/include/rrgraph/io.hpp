#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rrgraph/graph.hpp"

namespace rrgraph::io {

/// Malformed input; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Graph file:
//   vertices <n+1>
//   edge <i> <j> <w>      0 <= i < j <= n, w > 0
// Divisor file:
//   v<i> <value>          omitted vertices are 0
// `#` starts a comment in both. Values are `p`, `p/q` or finite decimals.

WeightedGraph parse_graph(std::string_view text);
Divisor parse_divisor(std::string_view text, std::size_t vertex_count);

WeightedGraph read_graph_file(const std::string& path);
Divisor read_divisor_file(const std::string& path, std::size_t vertex_count);

std::string format_graph(const WeightedGraph& g);
/// Writes every vertex, zeros included.
std::string format_divisor_file(const Divisor& d);

}  // namespace rrgraph::io
