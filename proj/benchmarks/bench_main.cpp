#include <benchmark/benchmark.h>

#include "csg/csg.hpp"

using namespace csg;

static void BM_Bresinsky(benchmark::State& state) {
  const Coord h = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(bresinsky(h));
}
BENCHMARK(BM_Bresinsky)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_SFamily(benchmark::State& state) {
  const Coord a = state.range(0);
  const auto d = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(s_family(a, 1, d));
}
BENCHMARK(BM_SFamily)->Args({4, 2})->Args({8, 2})->Args({12, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

static void BM_AntichainDecomposition(benchmark::State& state) {
  const Coord k = state.range(0);
  PointSet a;
  for (Coord i = 0; i < k; ++i) a.insert(Point{i + 1, k - i});
  const Semigroup s = antichain_semigroup(RationalCone::orthant(2), a);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(s));
}
BENCHMARK(BM_AntichainDecomposition)->Arg(3)->Arg(5)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ClassifyTGraded(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Semigroup s = t_graded(NumericalSemigroup({5, 6, 7}), d);
  for (auto _ : state) benchmark::DoNotOptimize(classify(s));
}
BENCHMARK(BM_ClassifyTGraded)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
