#include "rrgraph/linsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rrgraph/kernels.hpp"
#include "rrgraph/lattice.hpp"
#include "rrgraph/reduction.hpp"

namespace rrgraph {

bool NZeroSet::contains(const Divisor& d) const { return find(d) != nullptr; }

const NZeroElement* NZeroSet::find(const Divisor& d) const {
  for (const auto& e : elements)
    if (e.divisor == d) return &e;
  return nullptr;
}

Divisor n0_divisor(const WeightedGraph& g, const std::vector<std::size_t>& order) {
  if (order.size() != g.n()) throw std::invalid_argument("order must list every vertex of V0");
  Divisor d(g.vertex_count());
  d[0] = -1;
  std::vector<std::size_t> placed{0};
  for (auto v : order) {
    if (v == 0 || v >= g.vertex_count()) throw std::invalid_argument("order entry out of range");
    Rational s = -1;
    for (auto u : placed) s += g.weight(u, v);
    d[v] = s;
    placed.push_back(v);
  }
  return d;
}

namespace {

void walk_orders(const WeightedGraph& g, std::vector<std::size_t>& order, std::vector<bool>& used,
                 std::vector<Rational>& heat, Divisor& current, std::set<Divisor>& seen,
                 NZeroSet& out) {
  if (order.size() == g.n()) {
    if (seen.insert(current).second) out.elements.push_back({current, order});
    return;
  }
  for (std::size_t v = 1; v < g.vertex_count(); ++v) {
    if (used[v] || heat[v] <= 0) continue;
    used[v] = true;
    order.push_back(v);
    current[v] = heat[v] - 1;
    for (std::size_t u = 1; u < g.vertex_count(); ++u) heat[u] += g.weight(v, u);
    walk_orders(g, order, used, heat, current, seen, out);
    for (std::size_t u = 1; u < g.vertex_count(); ++u) heat[u] -= g.weight(v, u);
    current[v] = 0;
    order.pop_back();
    used[v] = false;
  }
}

}  // namespace

NZeroSet enumerate_n0(const WeightedGraph& g) {
  NZeroSet out;
  std::vector<std::size_t> order;
  std::vector<bool> used(g.vertex_count(), false);
  std::vector<Rational> heat(g.vertex_count());
  for (std::size_t v = 1; v < g.vertex_count(); ++v) heat[v] = g.weight(0, v);
  Divisor current(g.vertex_count());
  current[0] = -1;
  std::set<Divisor> seen;
  walk_orders(g, order, used, heat, current, seen, out);
  return out;
}

std::optional<Divisor> dominating_witness(const WeightedGraph& g, const Divisor& d) {
  auto r = reduce(g, d);
  if (r.reduced[0] > -1) return std::nullopt;
  // The burn condition gives reduced <= N0(burn order); D = reduced + P_c.
  Divisor n0 = n0_divisor(g, r.burn_order);
  return n0 + principal_divisor(g, r.certificate);
}

namespace {

Integer lcm_of_denominators(const WeightedGraph& g, const Divisor& d) {
  Integer q = 1;
  auto fold = [&q](const Rational& x) { mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), x.get_den_mpz_t()); };
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j) fold(g.weight(i, j));
  for (const auto& x : d.values()) fold(x);
  return q;
}

std::int64_t to_int64(const Rational& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p())
    throw std::overflow_error("value does not fit the integer kernel");
  return x.get_num().get_si();
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("value does not fit the integer kernel");
  return x.get_si();
}

// Everything needed to search one N0 orbit.
struct Orbit {
  std::size_t index;
  kernels::BoxProblem problem;  // bounds filled per search
  RationalVector center;        // L^{-1} phi(D - N0)
  std::vector<std::int64_t> start;
  std::int64_t start_value;
};

// Steepest-first local search over +-(indicator of a nonempty subset of V0).
std::vector<std::int64_t> descend(const kernels::BoxProblem& p, std::vector<std::int64_t> c,
                                  std::int64_t& value) {
  const std::size_t n = p.n;
  value = kernels::objective(p, c);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n) && !moved; ++mask) {
      for (int sign : {1, -1}) {
        auto trial = c;
        for (std::size_t j = 0; j < n; ++j)
          if (mask >> j & 1) trial[j] += sign;
        auto f = kernels::objective(p, trial);
        if (f < value) {
          value = f;
          c = std::move(trial);
          moved = true;
          break;
        }
      }
    }
  }
  return c;
}

}  // namespace

Dimension dimension(const WeightedGraph& g, const Divisor& d, BoxKernel kernel) {
  return dimension(g, d, enumerate_n0(g), kernel);
}

Dimension dimension(const WeightedGraph& g, const Divisor& d, const NZeroSet& n0, BoxKernel kernel) {
  if (d.size() != g.vertex_count()) throw std::invalid_argument("divisor length mismatch");
  const std::size_t n = g.n();

  if (auto witness = dominating_witness(g, d)) return {Rational(0), std::move(*witness)};

  const Integer q = lcm_of_denominators(g, d);
  const Rational excess = divisor_degree(d) - genus(g) + 1;  // deg(D - N0), same for all N0
  const Rational floor_value = std::max(excess, Rational(0));

  const auto lap = reduced_laplacian(g);
  const auto spread = solve(lap, RationalVector(n, Rational(1)));  // L^{-1} 1

  std::vector<std::int64_t> scaled_generators((n + 1) * n);
  for (std::size_t j = 0; j < n; ++j) {
    auto h = principal_generator(g, j + 1);
    for (std::size_t v = 0; v <= n; ++v) scaled_generators[v * n + j] = to_int64(h[v] * q);
  }

  std::vector<Orbit> orbits;
  std::int64_t best = -1;
  std::size_t best_orbit = 0;
  std::vector<std::int64_t> best_c;

  auto consider = [&](std::size_t orbit, std::int64_t value, const std::vector<std::int64_t>& c) {
    if (best < 0 || value < best) {
      best = value;
      best_orbit = orbit;
      best_c = c;
    }
  };

  for (std::size_t k = 0; k < n0.size(); ++k) {
    Divisor y = d - n0.elements[k].divisor;
    Orbit o;
    o.index = k;
    o.problem.n = n;
    o.problem.m = scaled_generators;
    o.problem.y.resize(n + 1);
    for (std::size_t v = 0; v <= n; ++v) o.problem.y[v] = to_int64(y[v] * q);
    o.center = solve(lap, y.phi());

    // Seed at the point whose V0 values share deg(D - N0) evenly with v0.
    std::vector<std::int64_t> seed(n);
    const Rational share = excess / static_cast<long>(n + 1);
    for (std::size_t j = 0; j < n; ++j)
      seed[j] = to_int64(floor(o.center[j] - share * spread[j] + Rational(1, 2)));

    std::int64_t from_seed, from_zero;
    auto a = descend(o.problem, seed, from_seed);
    auto b = descend(o.problem, std::vector<std::int64_t>(n, 0), from_zero);
    if (from_zero < from_seed || (from_zero == from_seed && b < a)) {
      o.start = std::move(b);
      o.start_value = from_zero;
    } else {
      o.start = std::move(a);
      o.start_value = from_seed;
    }
    consider(k, o.start_value, o.start);
    orbits.push_back(std::move(o));
  }

  const Rational target = floor_value * q;
  for (auto& o : orbits) {
    if (Rational(best) == target) break;
    const Rational f = Rational(best) / q;
    for (std::size_t j = 0; j < n; ++j) {
      o.problem.lo.push_back(to_int64(ceil(o.center[j] - f * spread[j])));
      o.problem.hi.push_back(to_int64(floor(o.center[j] + (f - excess) * spread[j])));
    }
    auto found = kernel == BoxKernel::parallel ? kernels::box_min_parallel(o.problem)
                                               : kernels::box_min_serial(o.problem);
    if (found) consider(o.index, found->value, found->argmin);
  }

  FiringVector c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = static_cast<long>(best_c[j]);
  Divisor witness = n0.elements[best_orbit].divisor + principal_divisor(g, c);
  return {Rational(best) / q, std::move(witness)};
}

Rational dim_l(const WeightedGraph& g, const Divisor& d) { return dimension(g, d).value; }

Rational rr_residual(const WeightedGraph& g, const Divisor& d) {
  const auto n0 = enumerate_n0(g);
  const Divisor k = canonical_divisor(g);
  Rational lhs = dimension(g, d, n0).value - dimension(g, k - d, n0).value;
  return lhs - (divisor_degree(d) + 1 - genus(g));
}

bool k_symmetry_check(const WeightedGraph& g) {
  const auto n0 = enumerate_n0(g);
  const Divisor k = canonical_divisor(g);
  for (const auto& e : n0.elements)
    if (!n0.contains(reduce(g, k - e.divisor).reduced)) return false;
  return true;
}

}  // namespace rrgraph
