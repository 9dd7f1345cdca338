#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rrgraph/graph.hpp"

namespace rrgraph {

using RationalVector = std::vector<Rational>;

/// Weighted Laplacian with the row and column of v0 removed, indexed by V0.
/// Entry (i, j) refers to vertices v_{i+1}, v_{j+1}.
class ReducedLaplacian {
 public:
  explicit ReducedLaplacian(const WeightedGraph& g);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  RationalVector apply(std::span<const Rational> x) const;
  RationalVector apply(const FiringVector& c) const;

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

/// Raised by solve on a singular system.
class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ReducedLaplacian reduced_laplacian(const WeightedGraph& g);

/// Exact x with L x = y, by Gaussian elimination over the rationals with
/// pivoting on the first nonzero entry.
RationalVector solve(const ReducedLaplacian& l, std::span<const Rational> y);

/// Firing vector c with D - D2 = sum c_j H_j, if D and D2 are linearly equivalent.
std::optional<FiringVector> is_equivalent(const WeightedGraph& g, const Divisor& d, const Divisor& d2);

/// c >= 0 and d - L c > 0 coordinatewise.
bool in_A(const WeightedGraph& g, std::span<const Rational> d, const FiringVector& c);

/// L^{-1} d; bounds every member of A(d). Requires d > 0.
RationalVector upper_bound_A(const WeightedGraph& g, std::span<const Rational> d);

/// Integer c >= 0 with L c >= z, for z >= 0: c = ceil(L^{-1}(z + deg)).
/// Rounding up adds a vector e in [0,1)^n, and (L e)_j > -deg(v_j), so the
/// degree shift absorbs it.
FiringVector phase1_offset(const WeightedGraph& g, std::span<const Rational> z);

}  // namespace rrgraph
