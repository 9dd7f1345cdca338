#include "rrgraph/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace rrgraph::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "invalid vertex index '" + tok + "'");
  return value;
}

Rational parse_value(const std::string& tok, std::size_t line) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty graph file");

  const auto& header = lines.front();
  if (header.tokens.size() != 2 || header.tokens[0] != "vertices")
    throw ParseError(header.number, "expected 'vertices <count>'");
  const std::size_t count = parse_index(header.tokens[1], header.number);
  if (count < 2) throw ParseError(header.number, "graph needs at least 2 vertices");

  std::vector<WeightedGraph::Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens.size() != 4 || line.tokens[0] != "edge")
      throw ParseError(line.number, "expected 'edge <i> <j> <weight>'");
    auto i = parse_index(line.tokens[1], line.number);
    auto j = parse_index(line.tokens[2], line.number);
    if (!(i < j && j < count)) throw ParseError(line.number, "edge endpoints must satisfy 0 <= i < j < vertices");
    auto w = parse_value(line.tokens[3], line.number);
    if (w <= 0) throw ParseError(line.number, "edge weight must be positive");
    if (!seen.emplace(i, j).second) throw ParseError(line.number, "duplicate edge");
    edges.push_back({i, j, w});
  }
  return WeightedGraph::from_edges(count, edges);
}

Divisor parse_divisor(std::string_view text, std::size_t vertex_count) {
  Divisor d(vertex_count);
  std::vector<bool> seen(vertex_count, false);
  for (const auto& line : tokenize(text)) {
    if (line.tokens.size() != 2 || line.tokens[0].size() < 2 || line.tokens[0][0] != 'v')
      throw ParseError(line.number, "expected 'v<index> <value>'");
    auto v = parse_index(line.tokens[0].substr(1), line.number);
    if (v >= vertex_count) throw ParseError(line.number, "vertex index out of range");
    if (seen[v]) throw ParseError(line.number, "vertex listed twice");
    seen[v] = true;
    d[v] = parse_value(line.tokens[1], line.number);
  }
  return d;
}

WeightedGraph read_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

Divisor read_divisor_file(const std::string& path, std::size_t vertex_count) {
  return parse_divisor(read_file(path), vertex_count);
}

std::string format_graph(const WeightedGraph& g) {
  std::string s = "vertices " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges())
    s += "edge " + std::to_string(e.i) + " " + std::to_string(e.j) + " " + format_rational(e.w) + "\n";
  return s;
}

std::string format_divisor_file(const Divisor& d) {
  std::string s;
  for (std::size_t v = 0; v < d.size(); ++v) s += "v" + std::to_string(v) + " " + format_rational(d[v]) + "\n";
  return s;
}

}  // namespace rrgraph::io
