#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Integer kernels behind dim_l. A problem is the scaled objective
//
//   F(c) = sum_v max(y_v - (M c)_v, 0),   c in Z^n, lo <= c <= hi,
//
// where M is (n+1) x n with column j equal to Q * H_{j+1} and y = Q * (D - N0)
// for a common denominator Q. Values are kept below kMaxMagnitude so every
// evaluation fits in int64 without overflow.

namespace rrgraph::kernels {

inline constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 28;

struct BoxProblem {
  std::size_t n = 0;
  std::vector<std::int64_t> y;   ///< length n + 1
  std::vector<std::int64_t> m;   ///< (n + 1) x n, row-major
  std::vector<std::int64_t> lo;  ///< length n
  std::vector<std::int64_t> hi;  ///< length n

  std::int64_t at(std::size_t v, std::size_t j) const { return m[v * n + j]; }
  bool empty() const;
  /// Throws std::overflow_error if any input is outside +-kMaxMagnitude.
  void check_range() const;
};

struct BoxMin {
  std::int64_t value;
  /// Lexicographically smallest minimizer.
  std::vector<std::int64_t> argmin;
};

/// F at a single point.
std::int64_t objective(const BoxProblem& p, const std::vector<std::int64_t>& c);

/// Reference: visits every point of the box in lexicographic order.
std::optional<BoxMin> box_min_serial(const BoxProblem& p);

/// Production kernel. The outer n-1 coordinates are split across OpenMP
/// threads; along the last coordinate F is convex, so its minimum is found by
/// binary search on the forward difference.
std::optional<BoxMin> box_min_parallel(const BoxProblem& p);

}  // namespace rrgraph::kernels
