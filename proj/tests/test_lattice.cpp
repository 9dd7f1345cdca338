#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "oracle.hpp"
#include "rrgraph/lattice.hpp"
#include "support.hpp"

using namespace rrgraph;
using namespace rrgraph::testing;

namespace {

std::vector<Rational> matrix(const ReducedLaplacian& l) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) out.push_back(l(i, j));
  return out;
}

}  // namespace

TEST_CASE("reduced_laplacian") {
  CHECK(matrix(reduced_laplacian(triangle())) == vec({"2", "-1", "-1", "2"}));
  CHECK(matrix(reduced_laplacian(two_vertex("3/2"))) == vec({"3/2"}));
  CHECK(matrix(reduced_laplacian(path3())) == vec({"13/6", "-5/3", "-5/3", "5/3"}));
}

TEST_CASE("solve") {
  CHECK(solve(reduced_laplacian(two_vertex("3/2")), vec({"3"})) == vec({"2"}));
  CHECK(solve(reduced_laplacian(triangle()), vec({"1", "1"})) == vec({"1", "1"}));
  CHECK(solve(reduced_laplacian(k4_mixed()), vec({"0", "0", "0"})) == vec({"0", "0", "0"}));
  CHECK_THROWS_AS(solve(reduced_laplacian(triangle()), vec({"1"})), std::invalid_argument);
}

TEST_CASE("solve is an exact inverse and the inverse is nonnegative") {
  gen::Rng rng(99);
  auto shape = gen::rational_shape();
  shape.max_vertices = 7;
  for (int iter = 0; iter < 150; ++iter) {
    auto g = gen::random_graph(rng, shape);
    auto l = reduced_laplacian(g);
    std::vector<Rational> y(g.n());
    for (auto& x : y) x = make_rational(rng.uniform(-20, 20), rng.uniform(1, 6));
    CHECK(l.apply(solve(l, y)) == y);

    // Monotonicity: y >= 0 gives x >= 0.
    for (auto& x : y) x = make_rational(rng.uniform(0, 20), rng.uniform(1, 6));
    for (const auto& x : solve(l, y)) CHECK(x >= 0);

    // Agrees with Cramer's rule.
    if (g.n() <= 5) CHECK(solve(l, y) == oracle::cramer_solve(g, y));
  }
}

TEST_CASE("is_equivalent") {
  auto g = two_vertex("3/2");
  auto d = div({"-2", "2"});
  CHECK(is_equivalent(g, d, d) == FiringVector{0});
  CHECK(is_equivalent(g, d, div({"-1/2", "1/2"})) == FiringVector{1});
  CHECK_FALSE(is_equivalent(triangle(), div({"0", "0", "0"}), div({"1", "0", "0"})));
  // Same degree, different class: (1,-1) - (0,0) = -1/2 H_1 on a weight-2 edge.
  CHECK_FALSE(is_equivalent(two_vertex("2"), div({"1", "-1"}), div({"0", "0"})));
}

TEST_CASE("is_equivalent recovers random firings") {
  gen::Rng rng(3);
  auto shape = gen::rational_shape();
  for (int iter = 0; iter < 100; ++iter) {
    auto g = gen::random_graph(rng, shape);
    auto d = gen::random_divisor(rng, g.vertex_count(), shape);
    auto c = gen::random_firing(rng, g.n(), 5);
    auto fired = apply_firing(g, d, c);
    CHECK(is_equivalent(g, d, fired) == c);
  }
}

TEST_CASE("in_A") {
  auto g = two_vertex("3/2");
  CHECK(in_A(g, vec({"1"}), FiringVector{0}));
  CHECK_FALSE(in_A(g, vec({"1"}), FiringVector{1}));
  CHECK(in_A(g, vec({"2"}), FiringVector{1}));
  CHECK_FALSE(in_A(g, vec({"5"}), FiringVector{-1}));
  CHECK(in_A(triangle(), vec({"1/2", "1/3"}), FiringVector{0, 0}));
}

TEST_CASE("upper_bound_A") {
  CHECK(upper_bound_A(two_vertex("3/2"), vec({"3"})) == vec({"2"}));
  CHECK(upper_bound_A(triangle(), vec({"1", "1"})) == vec({"1", "1"}));
  auto g = k4_mixed();
  auto ones = FiringVector{1, 1, 1};
  CHECK(upper_bound_A(g, reduced_laplacian(g).apply(ones)) == vec({"1", "1", "1"}));
  CHECK_THROWS_AS(upper_bound_A(triangle(), vec({"1", "0"})), std::invalid_argument);
}

TEST_CASE("phase1_offset") {
  CHECK(phase1_offset(two_vertex("3/2"), vec({"3"})) == FiringVector{3});
  CHECK_THROWS_AS(phase1_offset(triangle(), vec({"-1", "0"})), std::invalid_argument);

  gen::Rng rng(77);
  auto shape = gen::rational_shape();
  shape.max_vertices = 6;
  for (int iter = 0; iter < 200; ++iter) {
    auto g = gen::random_graph(rng, shape);
    std::vector<Rational> z(g.n());
    for (auto& x : z) x = iter % 5 == 0 ? Rational(0) : make_rational(rng.uniform(0, 30), rng.uniform(1, 4));
    auto c = phase1_offset(g, z);
    auto lc = reduced_laplacian(g).apply(c);
    for (std::size_t j = 0; j < g.n(); ++j) {
      CHECK(c[j] >= 0);
      CHECK(lc[j] >= z[j]);
    }
  }
}
