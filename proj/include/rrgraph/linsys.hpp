#pragma once

#include <optional>
#include <vector>

#include "rrgraph/graph.hpp"

namespace rrgraph {

/// Reduced divisor of degree g-1 with empty linear system:
///   N(v0) = -1,  N(v_{j_k}) = sum_{i<k} w_{j_i j_k} - 1  (j_0 = 0).
struct NZeroElement {
  Divisor divisor;
  std::vector<std::size_t> witness_order;
};

/// The finite set N0(G), deduplicated by exact divisor equality. Elements are
/// kept in the order of their lexicographically first witness permutation.
struct NZeroSet {
  std::vector<NZeroElement> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Divisor& d) const;
  /// Element with divisor `d`, or nullptr.
  const NZeroElement* find(const Divisor& d) const;
};

/// Walks every order of V0 in which each vertex has positive weight into the
/// vertices placed before it (v0 included).
NZeroSet enumerate_n0(const WeightedGraph& g);

/// Divisor N of the N0 formula for one order; no reducedness check.
Divisor n0_divisor(const WeightedGraph& g, const std::vector<std::size_t>& order);

/// For |D| empty: some N in N(G) with D <= N, namely N0 + P where N0 is built
/// from the burn order of D's reduced form and P restores D's class.
/// Absent when |D| is nonempty.
std::optional<Divisor> dominating_witness(const WeightedGraph& g, const Divisor& d);

enum class BoxKernel { parallel, serial };

struct Dimension {
  Rational value;
  /// Some N in N(G) with deg((D - N)^+) = value.
  Divisor witness;
};

/// l(D) = min over N in N(G) of deg((D - N)^+), together with a minimizing N.
///
/// N(G) is the orbit of N0(G) under principal divisors, so each N0 contributes
/// a minimization over c in Z^n of deg((D - N0 - P_c)^+). Every c that does
/// no worse than a known value f satisfies, on V0,
///   phi(D - N0) - f  <=  L c  <=  phi(D - N0) + f - deg(D - N0),
/// and because L^{-1} >= 0 that is an integer box, searched exhaustively.
/// A local descent over subset firings seeds f before any box is built.
Dimension dimension(const WeightedGraph& g, const Divisor& d, BoxKernel kernel = BoxKernel::parallel);
Dimension dimension(const WeightedGraph& g, const Divisor& d, const NZeroSet& n0,
                    BoxKernel kernel = BoxKernel::parallel);

Rational dim_l(const WeightedGraph& g, const Divisor& d);

/// l(D) - l(K - D) - (deg D + 1 - g). Zero for every D.
Rational rr_residual(const WeightedGraph& g, const Divisor& d);

/// Every K - N0 reduces back into N0(G).
bool k_symmetry_check(const WeightedGraph& g);

}  // namespace rrgraph
