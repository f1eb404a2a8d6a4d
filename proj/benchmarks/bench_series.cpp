#include <benchmark/benchmark.h>

#include "srcomb/index_set.hpp"
#include "srcomb/series.hpp"

using namespace srcomb;

static void SeriesMul(benchmark::State& state) {
  const std::size_t order = state.range(0);
  const EgfSeries a = IndexSet::odd().block_egf(order);
  const EgfSeries b = IndexSet::odd().component_egf(order);
  for (auto _ : state) {
    auto c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(SeriesMul)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void SeriesCompose(benchmark::State& state) {
  const std::size_t order = state.range(0);
  const EgfSeries g = IndexSet::odd().component_egf(order);
  const EgfSeries f = IndexSet::odd().block_egf(order);
  for (auto _ : state) {
    auto c = g.compose(f);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(SeriesCompose)->Arg(8)->Arg(16)->Arg(32);

static void SeriesReversion(benchmark::State& state) {
  const std::size_t order = state.range(0);
  const EgfSeries f = IndexSet::odd().block_egf(order);  // sinh
  for (auto _ : state) {
    auto r = f.reversion();
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(SeriesReversion)->Arg(8)->Arg(16)->Arg(32);

static void SeriesExp(benchmark::State& state) {
  const std::size_t order = state.range(0);
  const EgfSeries f = IndexSet::all().block_egf(order);
  for (auto _ : state) {
    auto e = f.exp();
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(SeriesExp)->Arg(16)->Arg(32)->Arg(64);
