#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

namespace rrgraph::oracle {

namespace {

using IntVec = std::vector<std::int64_t>;

std::int64_t as_int(const Rational& x) {
  if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw GuardRail("value is not a small integer");
  return x.get_num().get_si();
}

void require_small(const WeightedGraph& g, std::size_t max_n) {
  if (g.n() > max_n) throw GuardRail("graph too large for oracle");
}

// (D - sum_j c_j H_j)(v), straight from the weights.
Rational fired_value(const WeightedGraph& g, const Divisor& d, const std::vector<Integer>& c, std::size_t v) {
  Rational x = d[v];
  for (std::size_t j = 1; j < g.vertex_count(); ++j) {
    const Integer& cj = c[j - 1];
    if (cj == 0) continue;
    if (j == v) {
      Rational deg = 0;
      for (std::size_t u = 0; u < g.vertex_count(); ++u) deg += g.weight(u, j);
      x -= cj * deg;
    } else {
      x += cj * g.weight(v, j);
    }
  }
  return x;
}

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<Rational> cramer(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& y) {
  const Rational det = determinant(a);
  if (det == 0) throw std::runtime_error("oracle: singular system");
  std::vector<Rational> x(a.size());
  for (std::size_t col = 0; col < a.size(); ++col) {
    auto b = a;
    for (std::size_t row = 0; row < a.size(); ++row) b[row][col] = y[row];
    x[col] = determinant(std::move(b)) / det;
  }
  return x;
}

// Row v, column j of the (n+1) x n matrix whose columns are H_1..H_n.
Rational generator_entry(const WeightedGraph& g, std::size_t v, std::size_t j) {
  if (v != j) return -g.weight(v, j);
  Rational deg = 0;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) deg += g.weight(u, j);
  return deg;
}

Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

// Visits every integer vector in [lo, hi].
void for_box(const std::vector<Integer>& lo, const std::vector<Integer>& hi,
             const std::function<void(const std::vector<Integer>&)>& visit) {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return;
  std::vector<Integer> c = lo;
  for (;;) {
    visit(c);
    std::size_t i = 0;
    while (i < c.size() && c[i] == hi[i]) {
      c[i] = lo[i];
      ++i;
    }
    if (i == c.size()) return;
    ++c[i];
  }
}

// ---- integer chip firing -------------------------------------------------

struct IntGraph {
  std::size_t size;
  std::vector<IntVec> w;
  IntVec deg;
};

IntGraph to_int_graph(const WeightedGraph& g) {
  IntGraph ig{g.vertex_count(), std::vector<IntVec>(g.vertex_count(), IntVec(g.vertex_count())), IntVec(g.vertex_count())};
  for (std::size_t i = 0; i < ig.size; ++i)
    for (std::size_t j = 0; j < ig.size; ++j) {
      ig.w[i][j] = as_int(g.weight(i, j));
      ig.deg[i] += ig.w[i][j];
    }
  return ig;
}

void fire_vertex(const IntGraph& g, IntVec& d, std::size_t v, std::int64_t times) {
  d[v] -= times * g.deg[v];
  for (std::size_t u = 0; u < g.size; ++u) d[u] += times * g.w[v][u];
}

// q-reduced form with q = v0, integer arithmetic throughout.
IntVec q_reduce(const IntGraph& g, IntVec d) {
  // Clear debt off v0 by firing BFS parents, deepest vertices first; a parent
  // firing only adds chips to everything except itself.
  std::vector<std::size_t> parent(g.size, 0), order;
  std::vector<bool> seen(g.size, false);
  std::queue<std::size_t> bfs;
  bfs.push(0);
  seen[0] = true;
  while (!bfs.empty()) {
    auto u = bfs.front();
    bfs.pop();
    order.push_back(u);
    for (std::size_t v = 0; v < g.size; ++v)
      if (!seen[v] && g.w[u][v] > 0) {
        seen[v] = true;
        parent[v] = u;
        bfs.push(v);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto v = *it;
    if (v == 0 || d[v] >= 0) continue;
    auto w = g.w[parent[v]][v];
    fire_vertex(g, d, parent[v], (-d[v] + w - 1) / w);
  }

  // Burn from v0; fire the unburnt set until everything burns.
  for (;;) {
    std::vector<bool> burnt(g.size, false);
    burnt[0] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t v = 1; v < g.size; ++v) {
        if (burnt[v]) continue;
        std::int64_t into = 0;
        for (std::size_t u = 0; u < g.size; ++u)
          if (burnt[u]) into += g.w[u][v];
        if (d[v] < into) burnt[v] = grew = true;
      }
    }
    if (std::all_of(burnt.begin(), burnt.end(), [](bool b) { return b; })) return d;
    for (std::size_t v = 1; v < g.size; ++v)
      if (!burnt[v]) fire_vertex(g, d, v, 1);
  }
}

IntVec to_int_divisor(const Divisor& d) {
  IntVec out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = as_int(d[i]);
  return out;
}

}  // namespace

IntegerInstance::IntegerInstance(WeightedGraph graph, Divisor divisor)
    : graph_(std::move(graph)), divisor_(std::move(divisor)) {
  if (divisor_.size() != graph_.vertex_count()) throw std::invalid_argument("divisor length mismatch");
  for (std::size_t i = 0; i < graph_.vertex_count(); ++i) {
    if (divisor_[i].get_den() != 1) throw std::invalid_argument("divisor value is not an integer");
    for (std::size_t j = 0; j < graph_.vertex_count(); ++j)
      if (graph_.weight(i, j).get_den() != 1) throw std::invalid_argument("weight is not an integer");
  }
}

bool integer_nonempty(const IntegerInstance& inst) {
  auto g = to_int_graph(inst.graph());
  return q_reduce(g, to_int_divisor(inst.divisor()))[0] >= 0;
}

int bn_rank(const IntegerInstance& inst) {
  const auto& graph = inst.graph();
  require_small(graph, 5);
  auto start = to_int_divisor(inst.divisor());
  if (std::accumulate(start.begin(), start.end(), std::int64_t{0}) > 20)
    throw GuardRail("divisor degree too large for bn_rank");

  auto g = to_int_graph(graph);
  std::map<IntVec, int> memo;
  std::function<int(const IntVec&)> rank = [&](const IntVec& d) -> int {
    IntVec key = q_reduce(g, d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int r;
    if (key[0] < 0) {
      r = -1;
    } else {
      int best = 1 << 30;
      for (std::size_t v = 0; v < g.size && best > -1; ++v) {
        IntVec e = key;
        --e[v];
        best = std::min(best, rank(e));
      }
      r = best + 1;
    }
    memo.emplace(std::move(key), r);
    return r;
  };
  return rank(start);
}

std::vector<Rational> cramer_solve(const WeightedGraph& g, const std::vector<Rational>& y) {
  const std::size_t n = g.n();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = generator_entry(g, i + 1, j + 1);
  return cramer(a, y);
}

bool integer_nonempty_brute(const IntegerInstance& inst) {
  const auto& g = inst.graph();
  const auto& d = inst.divisor();
  require_small(g, 5);
  Rational deg = 0;
  for (const auto& x : d.values()) deg += x;
  if (deg < 0) return false;

  // P_c <= D pointwise and deg P_c = 0 force phi(D) - deg D <= L c <= phi(D).
  std::vector<Rational> upper(g.n()), lower(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) {
    upper[j] = d[j + 1];
    lower[j] = d[j + 1] - deg;
  }
  auto hi_r = cramer_solve(g, upper), lo_r = cramer_solve(g, lower);
  std::vector<Integer> lo(g.n()), hi(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) {
    lo[j] = -floor_of(-lo_r[j]);
    hi[j] = floor_of(hi_r[j]);
  }
  bool found = false;
  for_box(lo, hi, [&](const std::vector<Integer>& c) {
    if (found) return;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (fired_value(g, d, c, v) < 0) return;
    found = true;
  });
  return found;
}

bool subset_reduced_check(const WeightedGraph& g, const Divisor& d) {
  require_small(g, 5);
  const std::size_t n = g.n();
  for (std::size_t v = 1; v <= n; ++v)
    if (d[v] <= -1) return false;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Integer> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = (mask >> j) & 1;
    bool blocked = false;
    for (std::size_t v = 1; v <= n && !blocked; ++v)
      if (fired_value(g, d, c, v) <= -1) blocked = true;
    if (!blocked) return false;
  }
  return true;
}

std::vector<FiringVector> a_set_enumerate(const WeightedGraph& g, const std::vector<Rational>& d) {
  require_small(g, 5);
  if (d.size() != g.n()) throw std::invalid_argument("vector length mismatch");
  for (const auto& x : d)
    if (x <= 0) throw std::invalid_argument("a_set_enumerate requires d > 0");
  auto b = cramer_solve(g, d);
  std::vector<Integer> lo(g.n(), 0), hi(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) hi[j] = floor_of(b[j]) + 1;

  std::vector<FiringVector> out;
  for_box(lo, hi, [&](const std::vector<Integer>& c) {
    for (std::size_t j = 0; j < g.n(); ++j) {
      Rational lc = 0;
      for (std::size_t i = 0; i < g.n(); ++i) lc += generator_entry(g, j + 1, i + 1) * c[i];
      if (d[j] - lc <= 0) return;
    }
    out.emplace_back(c);
  });
  std::sort(out.begin(), out.end(), [](const FiringVector& a, const FiringVector& b) { return a.entries < b.entries; });
  return out;
}

std::vector<Divisor> n0_by_permutations(const WeightedGraph& g) {
  require_small(g, 5);
  std::vector<std::size_t> order(g.n());
  std::iota(order.begin(), order.end(), 1);
  std::set<Divisor> found;
  do {
    Divisor d(g.vertex_count());
    d[0] = -1;
    for (std::size_t k = 0; k < order.size(); ++k) {
      Rational s = g.weight(0, order[k]) - 1;
      for (std::size_t i = 0; i < k; ++i) s += g.weight(order[i], order[k]);
      d[order[k]] = s;
    }
    if (subset_reduced_check(g, d)) found.insert(d);
  } while (std::next_permutation(order.begin(), order.end()));
  return {found.begin(), found.end()};
}

Rational dim_l_box_oracle(const WeightedGraph& g, const Divisor& d, int radius) {
  require_small(g, 4);
  const std::size_t n = g.n(), nv = g.vertex_count();

  auto objective = [&](const Divisor& y, const std::vector<Integer>& c) {
    Rational s = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      Rational x = fired_value(g, y, c, v);
      if (x > 0) s += x;
    }
    return s;
  };
  auto relaxed = [&](const Divisor& y, const std::vector<Rational>& c) {
    Rational s = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      Rational x = y[v];
      for (std::size_t j = 0; j < n; ++j) x -= generator_entry(g, v, j + 1) * c[j];
      if (x > 0) s += x;
    }
    return s;
  };

  std::optional<Rational> best;
  for (const auto& n0 : n0_by_permutations(g)) {
    Divisor y = d - n0;

    // The relaxation is convex piecewise linear in c; its minimum sits where n
    // of the n+1 terms vanish.
    std::vector<Rational> real_min;
    std::optional<Rational> real_value;
    for (std::size_t skip = 0; skip < nv; ++skip) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> rhs;
      for (std::size_t v = 0; v < nv; ++v) {
        if (v == skip) continue;
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = generator_entry(g, v, j + 1);
        a.push_back(std::move(row));
        rhs.push_back(y[v]);
      }
      auto c = cramer(a, rhs);
      auto value = relaxed(y, c);
      if (!real_value || value < *real_value) {
        real_value = value;
        real_min = c;
      }
    }

    std::vector<Integer> rounded(n);
    for (std::size_t j = 0; j < n; ++j) rounded[j] = floor_of(real_min[j] + Rational(1, 2));

    for (const auto& centre : {std::vector<Integer>(n, 0), rounded}) {
      std::vector<Integer> lo(n), hi(n);
      for (std::size_t j = 0; j < n; ++j) {
        lo[j] = centre[j] - radius;
        hi[j] = centre[j] + radius;
      }
      for_box(lo, hi, [&](const std::vector<Integer>& c) {
        auto f = objective(y, c);
        if (!best || f < *best) best = f;
      });
    }
  }
  return *best;
}

}  // namespace rrgraph::oracle
