// Parallel box kernel against the serial reference, on raw box problems and
// end to end through dim_l.

#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "rrgraph/kernels.hpp"
#include "rrgraph/linsys.hpp"

using namespace rrgraph;

namespace {

kernels::BoxProblem make_problem(std::size_t n, std::int64_t half_width) {
  gen::Rng rng(42 + n);
  kernels::BoxProblem p;
  p.n = n;
  for (std::size_t v = 0; v <= n; ++v) p.y.push_back(rng.uniform(-400, 400));
  for (std::size_t k = 0; k < (n + 1) * n; ++k) p.m.push_back(rng.uniform(-30, 30));
  p.lo.assign(n, -half_width);
  p.hi.assign(n, half_width);
  return p;
}

void BM_BoxSerial(benchmark::State& state) {
  auto p = make_problem(static_cast<std::size_t>(state.range(0)), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::box_min_serial(p));
}

void BM_BoxParallel(benchmark::State& state) {
  auto p = make_problem(static_cast<std::size_t>(state.range(0)), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::box_min_parallel(p));
}

struct Workload {
  std::vector<WeightedGraph> graphs;
  std::vector<Divisor> divisors;
};

Workload make_workload() {
  gen::Rng rng(7);
  auto shape = gen::rational_shape();
  shape.min_vertices = 5;
  shape.max_vertices = 6;
  Workload w;
  for (int i = 0; i < 20; ++i) {
    w.graphs.push_back(gen::random_graph(rng, shape));
    w.divisors.push_back(gen::random_divisor(rng, w.graphs.back().vertex_count(), shape));
  }
  return w;
}

void run_dimension(benchmark::State& state, BoxKernel kernel) {
  static const Workload w = make_workload();
  for (auto _ : state)
    for (std::size_t i = 0; i < w.graphs.size(); ++i)
      benchmark::DoNotOptimize(dimension(w.graphs[i], w.divisors[i], kernel));
}

void BM_DimensionSerial(benchmark::State& state) { run_dimension(state, BoxKernel::serial); }
void BM_DimensionParallel(benchmark::State& state) { run_dimension(state, BoxKernel::parallel); }

}  // namespace

BENCHMARK(BM_BoxSerial)->Args({2, 200})->Args({3, 20})->Args({4, 6})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BoxParallel)->Args({2, 200})->Args({3, 20})->Args({4, 6})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DimensionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DimensionParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
