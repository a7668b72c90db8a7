#include <benchmark/benchmark.h>

#include "flagkit/danzer.hpp"
#include "flagkit/generators.hpp"
#include "flagkit/hvector.hpp"
#include "flagkit/subdivide.hpp"

using namespace flagkit;

static void BM_FaceClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const SimplicialComplex c = join(gen::cycle(n), gen::cycle(n));
    benchmark::DoNotOptimize(c.f_vector());
  }
}
BENCHMARK(BM_FaceClosure)->Arg(5)->Arg(10)->Arg(20);

static void BM_TchebTriangulation(benchmark::State& state) {
  const SimplicialComplex c = gen::cross_polytope_boundary(static_cast<int>(state.range(0)));
  const CellPoset p = from_simplicial(c);
  const auto order = random_order(c.vertices().members(), 7);
  for (auto _ : state) benchmark::DoNotOptimize(tcheb_triangulate(p, order).f_vector());
}
BENCHMARK(BM_TchebTriangulation)->DenseRange(2, 5);

static void BM_MirrorCounts(benchmark::State& state) {
  const CellPoset p = from_simplicial(gen::cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mirror(p).ftilde());
}
BENCHMARK(BM_MirrorCounts)->Arg(4)->Arg(8)->Arg(12);

static void BM_GammaVector(benchmark::State& state) {
  SimplicialComplex c = gen::cycle(5);
  for (int i = 1; i < state.range(0); ++i) c = join(c, gen::cycle(5));
  const SymmetricHVector h = symmetric_h(c);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_vector(h));
}
BENCHMARK(BM_GammaVector)->DenseRange(1, 4);

BENCHMARK_MAIN();
