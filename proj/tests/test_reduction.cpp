#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "oracle.hpp"
#include "rrgraph/lattice.hpp"
#include "rrgraph/reduction.hpp"
#include "support.hpp"

using namespace rrgraph;
using namespace rrgraph::testing;

using Order = std::vector<std::size_t>;

TEST_CASE("dhar_burn") {
  auto t = dhar_burn(triangle(), div({"0", "0", "0"}));
  CHECK(t.complete());
  CHECK(t.full_order == Order{1, 2});

  // v1 holds 1 > w(v0,v1) - 1 = 0 and cannot burn first; v2 burns, then v1
  // sees weight 2 from the burnt set.
  auto u = dhar_burn(triangle(), div({"0", "1", "0"}));
  CHECK(u.full_order == Order{2, 1});

  auto stuck = dhar_burn(triangle(), div({"0", "1", "1"}));
  CHECK_FALSE(stuck.complete());
  CHECK(stuck.unburnt == Order{1, 2});

  CHECK_THROWS_AS(dhar_burn(triangle(), div({"0", "-1", "0"})), std::invalid_argument);
}

TEST_CASE("dhar_burn priority") {
  auto d = div({"0", "0", "0"});
  Order priority{0, 2, 1};  // v2 ranks before v1
  CHECK(dhar_burn(triangle(), d, priority).full_order == Order{2, 1});
}

TEST_CASE("is_reduced") {
  CHECK(is_reduced(triangle(), div({"5", "0", "0"})));
  CHECK(is_reduced(triangle(), div({"-7", "1", "0"})));
  CHECK_FALSE(is_reduced(triangle(), div({"0", "1", "1"})));
  CHECK_FALSE(is_reduced(triangle(), div({"0", "-1", "0"})));
  CHECK(is_reduced(two_vertex("3/2"), div({"-1/2", "1/2"})));
  CHECK_FALSE(is_reduced(two_vertex("3/2"), div({"-2", "2"})));
}

TEST_CASE("reduce examples") {
  auto g = two_vertex("3/2");
  auto r = reduce(g, div({"-2", "2"}));
  CHECK(r.reduced == div({"-1/2", "1/2"}));
  CHECK(r.certificate == FiringVector{1});
  CHECK(r.burn_order == Order{1});

  auto t = reduce(triangle(), div({"0", "1", "1"}));
  CHECK(t.reduced == div({"2", "0", "0"}));
  CHECK(apply_firing(triangle(), div({"0", "1", "1"}), t.certificate) == t.reduced);

  // Large negative entries off v0 need the first phase.
  auto p = reduce(path3(), div({"0", "-9", "-4"}));
  CHECK(is_reduced(path3(), p.reduced));
  CHECK(is_equivalent(path3(), p.reduced, div({"0", "-9", "-4"})));
}

TEST_CASE("linear_system_nonempty") {
  CHECK(linear_system_nonempty(triangle(), div({"0", "0", "0"})));
  CHECK_FALSE(linear_system_nonempty(triangle(), div({"-1", "0", "0"})));
  CHECK(linear_system_nonempty(two_vertex("3/2"), div({"-2", "2"})));
  CHECK_FALSE(linear_system_nonempty(two_vertex("3/2"), div({"-1", "1/3"})));
}

TEST_CASE("reduce agrees with the subset oracle and is idempotent") {
  gen::Rng rng(41);
  auto shape = gen::rational_shape();
  shape.max_vertices = 6;
  for (int iter = 0; iter < 300; ++iter) {
    auto g = gen::random_graph(rng, shape);
    auto d = gen::random_divisor(rng, g.vertex_count(), shape);
    auto r = reduce(g, d);
    CHECK(oracle::subset_reduced_check(g, r.reduced));
    CHECK(is_reduced(g, r.reduced));
    CHECK(apply_firing(g, d, r.certificate) == r.reduced);
    CHECK(is_reduced(g, d) == oracle::subset_reduced_check(g, d));

    auto again = reduce(g, r.reduced);
    CHECK(again.reduced == r.reduced);
    CHECK(again.certificate.is_zero());

    auto shifted = d + principal_divisor(g, gen::random_firing(rng, g.n(), 4));
    CHECK(reduce(g, shifted).reduced == r.reduced);
  }
}

TEST_CASE("reduced form does not depend on the burn priority") {
  gen::Rng rng(8);
  auto shape = gen::rational_shape();
  shape.max_vertices = 6;
  for (int iter = 0; iter < 200; ++iter) {
    auto g = gen::random_graph(rng, shape);
    auto d = gen::random_divisor(rng, g.vertex_count(), shape);
    Order priority(g.vertex_count());
    std::iota(priority.begin(), priority.end(), 0);
    for (std::size_t i = priority.size() - 1; i > 0; --i)
      std::swap(priority[i], priority[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i)))]);
    auto a = reduce(g, d);
    auto b = reduce(g, d, priority);
    CHECK(a.reduced == b.reduced);
    CHECK(a.certificate == b.certificate);
  }
}

TEST_CASE("exhaustive reducedness on a small grid") {
  // Every divisor on the 3/2 edge and on path3 with entries in a small grid.
  for (const auto& g : {two_vertex("3/2"), path3()}) {
    std::vector<Rational> grid;
    for (int p = -6; p <= 6; ++p) grid.push_back(make_rational(p, 2));
    std::vector<std::size_t> idx(g.vertex_count(), 0);
    for (;;) {
      Divisor d(g.vertex_count());
      for (std::size_t v = 0; v < d.size(); ++v) d[v] = grid[idx[v]];
      CHECK(is_reduced(g, d) == oracle::subset_reduced_check(g, d));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == grid.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
}
