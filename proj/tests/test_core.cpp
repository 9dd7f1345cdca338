#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "support.hpp"

using namespace rrgraph;
using namespace rrgraph::testing;

TEST_CASE("rational literals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7/14") == q("-1/2"));
  CHECK(parse_rational("1.25") == q("5/4"));
  CHECK(parse_rational("-0.5") == q("-1/2"));
  CHECK(parse_rational("+2/4") == q("1/2"));
  CHECK(format_rational(q("6/4")) == "3/2");
  CHECK(format_rational(q("-8/4")) == "-2");

  for (auto bad : {"", "x", "1/0", "1/", "/2", "1.", ".5", "1e3", "1/-2", "--1"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("floor and ceil") {
  CHECK(rrgraph::floor(q("-1/2")) == -1);
  CHECK(rrgraph::ceil(q("-1/2")) == 0);
  CHECK(rrgraph::floor(q("7/3")) == 2);
  CHECK(rrgraph::ceil(q("7/3")) == 3);
  CHECK(rrgraph::ceil(q("4")) == 4);
}

TEST_CASE("rational format round trip") {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    auto x = make_rational(rng.uniform(-1000, 1000), rng.uniform(1, 60));
    CHECK(parse_rational(format_rational(x)) == x);
  }
}

TEST_CASE("graph invariants are enforced") {
  CHECK_THROWS_WITH_AS(WeightedGraph::from_edges(3, {{0, 1, 1}}), "graph not connected", GraphError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(1, {}), GraphError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{1, 1, 1}, {0, 1, 1}}), GraphError);
  std::vector<Rational> asym{0, 1, 2, 0};
  CHECK_THROWS_AS(WeightedGraph(2, asym), GraphError);
  std::vector<Rational> negative{0, -1, -1, 0};
  CHECK_THROWS_AS(WeightedGraph(2, negative), GraphError);
}

TEST_CASE("vertex_degree") {
  CHECK(vertex_degree(triangle(), 0) == 2);
  CHECK(vertex_degree(two_vertex("3/2"), 1) == q("3/2"));
  CHECK(vertex_degree(path3(), 1) == q("13/6"));
  CHECK_THROWS_AS(vertex_degree(triangle(), 3), std::out_of_range);
}

TEST_CASE("genus") {
  CHECK(genus(triangle()) == 1);
  CHECK(genus(two_vertex("3/2")) == q("1/2"));
  CHECK(genus(two_vertex("1")) == 0);
}

TEST_CASE("divisor_degree") {
  CHECK(divisor_degree(div({"0", "0", "0"})) == 0);
  CHECK(divisor_degree(div({"-1", "1/2"})) == q("-1/2"));
}

TEST_CASE("canonical_divisor") {
  CHECK(canonical_divisor(triangle()) == div({"0", "0", "0"}));
  CHECK(canonical_divisor(two_vertex("3/2")) == div({"-1/2", "-1/2"}));
  CHECK(canonical_divisor(two_vertex("1")) == div({"-1", "-1"}));
}

TEST_CASE("principal_generator") {
  CHECK(principal_generator(triangle(), 1) == div({"-1", "2", "-1"}));
  CHECK(principal_generator(two_vertex("3/2"), 1) == div({"-3/2", "3/2"}));
  CHECK_THROWS_AS(principal_generator(triangle(), 5), std::out_of_range);
}

TEST_CASE("apply_firing") {
  auto g = two_vertex("3/2");
  auto d = div({"-2", "2"});
  CHECK(apply_firing(g, d, FiringVector{0}) == d);
  CHECK(apply_firing(g, d, FiringVector{1}) == div({"-1/2", "1/2"}));
  CHECK_THROWS_AS(apply_firing(g, d, FiringVector{1, 2}), std::invalid_argument);
}

TEST_CASE("positive and negative parts") {
  auto d = div({"-1", "1/2"});
  CHECK(positive_part(d) == div({"0", "1/2"}));
  CHECK(negative_part(d) == div({"-1", "0"}));
  CHECK(positive_part(div({"0", "0"})) == div({"0", "0"}));
  CHECK(negative_part(div({"0", "0"})) == div({"0", "0"}));
}

TEST_CASE("core identities on random graphs") {
  gen::Rng rng(2024);
  auto shape = gen::rational_shape();
  shape.max_vertices = 6;
  for (int iter = 0; iter < 200; ++iter) {
    auto g = gen::random_graph(rng, shape);
    auto d = gen::random_divisor(rng, g.vertex_count(), shape);

    CHECK(divisor_degree(canonical_divisor(g)) == 2 * genus(g) - 2);

    Divisor total(g.vertex_count());
    for (std::size_t j = 0; j < g.vertex_count(); ++j) {
      auto h = principal_generator(g, j);
      CHECK(divisor_degree(h) == 0);
      total += h;
    }
    CHECK(total == Divisor::zero(g.vertex_count()));

    auto c = gen::random_firing(rng, g.n(), 4);
    CHECK(divisor_degree(apply_firing(g, d, c)) == divisor_degree(d));

    CHECK(positive_part(d) + negative_part(d) == d);
    CHECK(divisor_degree(positive_part(d)) == -divisor_degree(negative_part(-d)));
  }
}

TEST_CASE("integer weights give integer genus and generators") {
  gen::Rng rng(5);
  auto shape = gen::integer_shape();
  for (int iter = 0; iter < 50; ++iter) {
    auto g = gen::random_graph(rng, shape);
    CHECK(is_integer(genus(g)));
    for (std::size_t j = 0; j < g.vertex_count(); ++j) {
      auto h = principal_generator(g, j);
      for (const auto& x : h.values()) CHECK(is_integer(x));
    }
  }
}
