#pragma once

#include <cstdint>
#include <random>

#include "rrgraph/graph.hpp"

namespace rrgraph::gen {

/// Seeded stream with platform-independent bounded draws (the standard
/// distributions are implementation-defined, which would break replay).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return next() >> 63; }

 private:
  std::mt19937_64 engine_;
};

struct InstanceShape {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 5;
  /// Integer weights in [1, max_int_weight] when set; otherwise p/q with
  /// q <= max_den and 0 < p/q <= max_weight.
  bool integer = false;
  std::int64_t max_int_weight = 3;
  std::int64_t max_den = 4;
  std::int64_t max_weight = 2;
  /// Divisor values in [value_lo, value_hi] with denominators <= max_den
  /// (integers when `integer`).
  std::int64_t value_lo = -5;
  std::int64_t value_hi = 5;
};

InstanceShape rational_shape();
InstanceShape integer_shape();

Rational random_weight(Rng& rng, const InstanceShape& shape);
Rational random_value(Rng& rng, const InstanceShape& shape);

/// Random spanning tree (each vertex attaches to an earlier one, labels then
/// shuffled), plus each remaining pair with probability 1/2.
WeightedGraph random_graph(Rng& rng, const InstanceShape& shape);

Divisor random_divisor(Rng& rng, std::size_t size, const InstanceShape& shape);

/// Entries uniform in [-bound, bound].
FiringVector random_firing(Rng& rng, std::size_t n, std::int64_t bound);

}  // namespace rrgraph::gen
