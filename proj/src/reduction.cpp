#include "rrgraph/reduction.hpp"

#include <stdexcept>

#include "rrgraph/lattice.hpp"

namespace rrgraph {

namespace {

bool above_minus_one_off_base(const Divisor& d) {
  for (std::size_t v = 1; v < d.size(); ++v)
    if (d[v] <= -1) return false;
  return true;
}

void check_priority(const WeightedGraph& g, std::span<const std::size_t> priority) {
  if (!priority.empty() && priority.size() != g.vertex_count())
    throw std::invalid_argument("priority must have one rank per vertex");
}

// Subtract H_j for every j in `set`: each v in the set loses its weight to the
// outside, each outside vertex gains its weight into the set.
void fire_set(const WeightedGraph& g, Divisor& d, const std::vector<bool>& in_set) {
  const std::size_t nv = g.vertex_count();
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t u = 0; u < nv; ++u) {
      if (in_set[u] == in_set[v] || g.weight(u, v) == 0) continue;
      if (in_set[v])
        d[v] -= g.weight(u, v);
      else
        d[v] += g.weight(u, v);
    }
  }
}

}  // namespace

BurnOutcome dhar_burn(const WeightedGraph& g, const Divisor& d, std::span<const std::size_t> priority) {
  if (d.size() != g.vertex_count()) throw std::invalid_argument("divisor length mismatch");
  check_priority(g, priority);
  if (!above_minus_one_off_base(d)) throw std::invalid_argument("dhar_burn requires D(v) > -1 on V0");

  const std::size_t nv = g.vertex_count();
  std::vector<bool> burnt(nv, false);
  burnt[0] = true;
  // Weight from each vertex into the burnt set, updated as vertices burn.
  std::vector<Rational> heat(nv);
  for (std::size_t v = 1; v < nv; ++v) heat[v] = g.weight(0, v);

  BurnOutcome out;
  for (;;) {
    std::size_t pick = nv;
    for (std::size_t v = 1; v < nv; ++v) {
      if (burnt[v] || d[v] > heat[v] - 1) continue;
      if (pick == nv || (priority.empty() ? v < pick : priority[v] < priority[pick])) pick = v;
    }
    if (pick == nv) break;
    burnt[pick] = true;
    out.full_order.push_back(pick);
    for (std::size_t v = 1; v < nv; ++v)
      if (!burnt[v]) heat[v] += g.weight(pick, v);
  }

  if (out.full_order.size() != g.n()) {
    for (std::size_t v = 1; v < nv; ++v)
      if (!burnt[v]) out.unburnt.push_back(v);
  }
  return out;
}

bool is_reduced(const WeightedGraph& g, const Divisor& d) {
  if (d.size() != g.vertex_count()) throw std::invalid_argument("divisor length mismatch");
  if (!above_minus_one_off_base(d)) return false;
  return dhar_burn(g, d).complete();
}

ReductionResult reduce(const WeightedGraph& g, const Divisor& d, std::span<const std::size_t> priority) {
  if (d.size() != g.vertex_count()) throw std::invalid_argument("divisor length mismatch");
  check_priority(g, priority);

  // Phase 1: move into the region D > -1 on V0.
  Divisor neg = -negative_part(d);
  FiringVector certificate = -phase1_offset(g, neg.phi());
  Divisor current = apply_firing(g, d, certificate);

  // Phase 2: fire the unburnt set until everything burns. Each firing keeps
  // D > -1 on V0, and the cumulative firing stays inside the bounded set A(d).
  for (;;) {
    auto burn = dhar_burn(g, current, priority);
    if (burn.complete()) return {std::move(current), std::move(certificate), std::move(burn.full_order)};
    std::vector<bool> in_set(g.vertex_count(), false);
    for (auto v : burn.unburnt) {
      in_set[v] = true;
      certificate[v - 1] += 1;
    }
    fire_set(g, current, in_set);
  }
}

bool linear_system_nonempty(const WeightedGraph& g, const Divisor& d) {
  return reduce(g, d).reduced[0] > -1;
}

}  // namespace rrgraph
