#pragma once

#include <string>
#include <vector>

#include "rrgraph/graph.hpp"

namespace rrgraph::testing {

inline Rational q(const char* s) { return parse_rational(s); }

inline Divisor div(std::initializer_list<const char*> values) {
  Divisor d(values.size());
  std::size_t i = 0;
  for (auto s : values) d[i++] = q(s);
  return d;
}

inline WeightedGraph triangle() {
  return WeightedGraph::from_edges(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
}

inline WeightedGraph two_vertex(const char* w) { return WeightedGraph::from_edges(2, {{0, 1, q(w)}}); }

/// v0 - v1 - v2 with weights 1/2 and 5/3.
inline WeightedGraph path3() {
  return WeightedGraph::from_edges(3, {{0, 1, q("1/2")}, {1, 2, q("5/3")}});
}

/// Complete graph on 4 vertices with mixed rational weights.
inline WeightedGraph k4_mixed() {
  return WeightedGraph::from_edges(
      4, {{0, 1, 1}, {0, 2, q("1/2")}, {0, 3, 2}, {1, 2, q("3/4")}, {1, 3, 1}, {2, 3, q("1/3")}});
}

inline std::vector<Rational> vec(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (auto s : values) out.push_back(q(s));
  return out;
}

}  // namespace rrgraph::testing
