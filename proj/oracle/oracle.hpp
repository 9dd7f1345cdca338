#pragma once

// Brute-force reference implementations for differential testing. Nothing in
// here calls into lattice, reduction or linsys: linear algebra goes through
// Cramer's rule, reducedness is checked subset by subset, and the integer
// emptiness test has its own chip-firing loop.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rrgraph/graph.hpp"

namespace rrgraph::oracle {

/// Raised when an input exceeds the limits an exponential oracle accepts.
class GuardRail : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Graph with integer weights and an integer divisor.
class IntegerInstance {
 public:
  IntegerInstance(WeightedGraph graph, Divisor divisor);

  const WeightedGraph& graph() const { return graph_; }
  const Divisor& divisor() const { return divisor_; }

 private:
  WeightedGraph graph_;
  Divisor divisor_;
};

/// Integer divisor rank: -1 if |D| is empty, else 1 + min_v r(D - v).
/// Guard rails: n <= 5 and deg(D) <= 20.
int bn_rank(const IntegerInstance& inst);

/// Integer |D| nonemptiness via the oracle's own q-reduction.
bool integer_nonempty(const IntegerInstance& inst);

/// Integer |D| nonemptiness by exhaustive search for c with D - P_c >= 0.
/// Guard rail: n <= 5.
bool integer_nonempty_brute(const IntegerInstance& inst);

/// Literal reducedness: D > -1 on V0, and every nonempty I of V0 leaves some
/// v with (D - sum_{j in I} H_j)(v) <= -1. Guard rail: n <= 5.
bool subset_reduced_check(const WeightedGraph& g, const Divisor& d);

/// All c in [0, floor(L^{-1} d) + 1] with c >= 0 and d - L c > 0.
/// Requires d > 0; guard rail n <= 5.
std::vector<FiringVector> a_set_enumerate(const WeightedGraph& g, const std::vector<Rational>& d);

/// L^{-1} y by Cramer's rule.
std::vector<Rational> cramer_solve(const WeightedGraph& g, const std::vector<Rational>& y);

/// N0(G) from all n! orders, filtered by subset_reduced_check.
std::vector<Divisor> n0_by_permutations(const WeightedGraph& g);

/// min deg((D - N0 - P_c)^+) over c in cubes of the given radius around 0 and
/// around the rounded minimizer of the real relaxation. Guard rail: n <= 4.
Rational dim_l_box_oracle(const WeightedGraph& g, const Divisor& d, int radius);

}  // namespace rrgraph::oracle
