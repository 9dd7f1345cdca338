#include "generators.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace rrgraph::gen {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

InstanceShape rational_shape() { return {}; }

InstanceShape integer_shape() {
  InstanceShape s;
  s.integer = true;
  s.max_vertices = 4;
  s.value_lo = -3;
  s.value_hi = 5;
  return s;
}

Rational random_weight(Rng& rng, const InstanceShape& shape) {
  if (shape.integer) return rng.uniform(1, shape.max_int_weight);
  auto q = rng.uniform(1, shape.max_den);
  auto p = rng.uniform(1, shape.max_weight * q);
  return make_rational(p, q);
}

Rational random_value(Rng& rng, const InstanceShape& shape) {
  if (shape.integer) return rng.uniform(shape.value_lo, shape.value_hi);
  auto q = rng.uniform(1, shape.max_den);
  auto p = rng.uniform(shape.value_lo * q, shape.value_hi * q);
  return make_rational(p, q);
}

WeightedGraph random_graph(Rng& rng, const InstanceShape& shape) {
  const auto count = static_cast<std::size_t>(
      rng.uniform(static_cast<std::int64_t>(shape.min_vertices), static_cast<std::int64_t>(shape.max_vertices)));

  std::vector<std::size_t> label(count);
  std::iota(label.begin(), label.end(), 0);
  for (std::size_t i = count; i > 1; --i)
    std::swap(label[i - 1], label[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);

  std::vector<Rational> w(count * count);
  auto set = [&](std::size_t a, std::size_t b, const Rational& x) {
    w[a * count + b] = x;
    w[b * count + a] = x;
  };
  for (std::size_t v = 1; v < count; ++v) {
    auto u = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(v) - 1));
    set(label[u], label[v], random_weight(rng, shape));
  }
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (w[i * count + j] == 0 && rng.coin()) set(i, j, random_weight(rng, shape));
  return WeightedGraph(count, std::move(w));
}

Divisor random_divisor(Rng& rng, std::size_t size, const InstanceShape& shape) {
  Divisor d(size);
  for (std::size_t v = 0; v < size; ++v) d[v] = random_value(rng, shape);
  return d;
}

FiringVector random_firing(Rng& rng, std::size_t n, std::int64_t bound) {
  FiringVector c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = static_cast<long>(rng.uniform(-bound, bound));
  return c;
}

}  // namespace rrgraph::gen
