#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "generators.hpp"
#include "oracle.hpp"
#include "rrgraph/lattice.hpp"
#include "rrgraph/linsys.hpp"
#include "rrgraph/reduction.hpp"
#include "support.hpp"

using namespace rrgraph;
using namespace rrgraph::testing;

namespace {

std::vector<Divisor> sorted_divisors(const NZeroSet& s) {
  std::vector<Divisor> out;
  for (const auto& e : s.elements) out.push_back(e.divisor);
  std::sort(out.begin(), out.end());
  return out;
}

// Expected values below were computed by an exact brute-force search over
// orders and firing vectors, written separately from this library.
struct Frozen {
  const char* name;
  WeightedGraph graph;
  Divisor d;
  Rational l;
  Rational l_k;
};

std::vector<Frozen> frozen() {
  return {
      {"triangle D=0", triangle(), div({"0", "0", "0"}), 1, 1},
      {"edge 3/2 D=0", two_vertex("3/2"), div({"0", "0"}), 1, q("1/2")},
      {"edge 3/2 D=(1/3,1/2)", two_vertex("3/2"), div({"1/3", "1/2"}), q("4/3"), 0},
      {"path3", path3(), div({"1", "-1/2", "2/3"}), 2, 0},
      {"k4 mixed", k4_mixed(), div({"1/2", "0", "-1", "3/2"}), q("1/4"), q("5/6")},
  };
}

}  // namespace

TEST_CASE("n0_divisor") {
  CHECK(n0_divisor(triangle(), {1, 2}) == div({"-1", "0", "1"}));
  CHECK(n0_divisor(triangle(), {2, 1}) == div({"-1", "1", "0"}));
  CHECK(n0_divisor(two_vertex("3/2"), {1}) == div({"-1", "1/2"}));
}

TEST_CASE("enumerate_n0 examples") {
  auto t = enumerate_n0(triangle());
  CHECK(sorted_divisors(t) == std::vector<Divisor>{div({"-1", "0", "1"}), div({"-1", "1", "0"})});
  CHECK(t.find(div({"-1", "0", "1"}))->witness_order == std::vector<std::size_t>{1, 2});

  CHECK(sorted_divisors(enumerate_n0(path3())) == std::vector<Divisor>{div({"-1", "-1/2", "2/3"})});

  auto k4 = sorted_divisors(enumerate_n0(k4_mixed()));
  std::vector<Divisor> expected{
      div({"-1", "0", "1/4", "7/3"}),  div({"-1", "0", "7/12", "2"}),   div({"-1", "3/4", "-1/2", "7/3"}),
      div({"-1", "1", "7/12", "1"}),   div({"-1", "7/4", "-1/2", "4/3"}), div({"-1", "7/4", "-1/6", "1"}),
  };
  std::sort(expected.begin(), expected.end());
  CHECK(k4 == expected);
}

TEST_CASE("enumerate_n0 matches the permutation oracle") {
  gen::Rng rng(13);
  auto shape = gen::rational_shape();
  shape.max_vertices = 6;
  for (int iter = 0; iter < 100; ++iter) {
    auto g = gen::random_graph(rng, shape);
    auto n0 = enumerate_n0(g);
    auto ref = oracle::n0_by_permutations(g);
    std::sort(ref.begin(), ref.end());
    CHECK(sorted_divisors(n0) == ref);
    for (const auto& e : n0.elements) {
      CHECK(divisor_degree(e.divisor) == genus(g) - 1);
      CHECK(is_reduced(g, e.divisor));
      CHECK(n0_divisor(g, e.witness_order) == e.divisor);
    }
  }
}

TEST_CASE("dominating_witness") {
  auto g = two_vertex("3/2");
  CHECK(dominating_witness(g, div({"-3", "1/2"})) == div({"-1", "1/2"}));
  CHECK_FALSE(dominating_witness(g, div({"0", "0"})));

  gen::Rng rng(21);
  auto shape = gen::rational_shape();
  for (int iter = 0; iter < 200; ++iter) {
    auto gr = gen::random_graph(rng, shape);
    auto d = gen::random_divisor(rng, gr.vertex_count(), shape);
    auto w = dominating_witness(gr, d);
    CHECK(w.has_value() != linear_system_nonempty(gr, d));
    if (!w) continue;
    CHECK(dominated_by(d, *w));
    CHECK(divisor_degree(*w) == genus(gr) - 1);
    CHECK(enumerate_n0(gr).contains(reduce(gr, *w).reduced));
  }
}

TEST_CASE("frozen dimensions") {
  for (const auto& f : frozen()) {
    CAPTURE(f.name);
    auto k_minus_d = canonical_divisor(f.graph) - f.d;
    CHECK(dim_l(f.graph, f.d) == f.l);
    CHECK(dim_l(f.graph, k_minus_d) == f.l_k);
    CHECK(rr_residual(f.graph, f.d) == 0);
    CHECK(f.l - f.l_k == divisor_degree(f.d) + 1 - genus(f.graph));
  }
  auto k4 = frozen().back();
  CHECK(divisor_degree(k4.d) + 1 - genus(k4.graph) == q("-7/12"));
}

TEST_CASE("dimension witnesses are members of N(G)") {
  gen::Rng rng(55);
  auto shape = gen::rational_shape();
  for (int iter = 0; iter < 150; ++iter) {
    auto g = gen::random_graph(rng, shape);
    auto d = gen::random_divisor(rng, g.vertex_count(), shape);
    auto dim = dimension(g, d);
    CHECK(divisor_degree(positive_part(d - dim.witness)) == dim.value);
    CHECK(enumerate_n0(g).contains(reduce(g, dim.witness).reduced));
  }
}

TEST_CASE("parallel and serial kernels give the same dimension") {
  gen::Rng rng(34);
  auto shape = gen::rational_shape();
  for (int iter = 0; iter < 150; ++iter) {
    auto g = gen::random_graph(rng, shape);
    auto d = gen::random_divisor(rng, g.vertex_count(), shape);
    auto n0 = enumerate_n0(g);
    auto a = dimension(g, d, n0, BoxKernel::parallel);
    auto b = dimension(g, d, n0, BoxKernel::serial);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("Riemann-Roch residual and bounds on random instances") {
  gen::Rng rng(89);
  auto shape = gen::rational_shape();
  for (int iter = 0; iter < 200; ++iter) {
    auto g = gen::random_graph(rng, shape);
    auto d = gen::random_divisor(rng, g.vertex_count(), shape);
    CHECK(rr_residual(g, d) == 0);
    auto l = dim_l(g, d);
    CHECK(l >= 0);
    CHECK(l >= divisor_degree(d) - genus(g) + 1);
    CHECK((l == 0) != linear_system_nonempty(g, d));
    if (g.n() <= 3) CHECK(l == oracle::dim_l_box_oracle(g, d, 6));
  }
}

TEST_CASE("k_symmetry_check") {
  CHECK(k_symmetry_check(triangle()));
  CHECK(k_symmetry_check(k4_mixed()));
  gen::Rng rng(144);
  auto shape = gen::rational_shape();
  shape.max_vertices = 6;
  for (int iter = 0; iter < 60; ++iter) CHECK(k_symmetry_check(gen::random_graph(rng, shape)));
}
