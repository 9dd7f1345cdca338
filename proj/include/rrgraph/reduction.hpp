#pragma once

#include <span>
#include <vector>

#include "rrgraph/graph.hpp"

namespace rrgraph {

/// Result of the burning search from v0. Vertex labels are graph indices (1..n).
struct BurnOutcome {
  /// Every vertex of V0 burned; this is the order (j_1, ..., j_n). When a vertex
  /// v burned, D(v) <= (weight into the burnt set) - 1.
  std::vector<std::size_t> full_order;
  /// Vertices that never burned, ascending. Empty iff the burn was complete.
  std::vector<std::size_t> unburnt;

  bool complete() const { return unburnt.empty(); }
};

struct ReductionResult {
  Divisor reduced;
  /// reduced == apply_firing(g, input, certificate).
  FiringVector certificate;
  std::vector<std::size_t> burn_order;
};

/// Burns V0 starting from {v0}. Among burnable vertices the one with the
/// smallest priority rank burns first; the default rank is the vertex index.
/// `priority`, when given, maps vertex index -> rank and has vertex_count entries.
/// Requires D(v) > -1 on V0.
BurnOutcome dhar_burn(const WeightedGraph& g, const Divisor& d,
                      std::span<const std::size_t> priority = {});

bool is_reduced(const WeightedGraph& g, const Divisor& d);

/// Unique reduced divisor equivalent to `d`.
ReductionResult reduce(const WeightedGraph& g, const Divisor& d,
                       std::span<const std::size_t> priority = {});

/// |D| is nonempty iff the reduced form has value > -1 at v0.
bool linear_system_nonempty(const WeightedGraph& g, const Divisor& d);

}  // namespace rrgraph
