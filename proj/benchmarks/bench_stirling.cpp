#include <benchmark/benchmark.h>

#include "srcomb/riordan.hpp"
#include "srcomb/stirling.hpp"

using namespace srcomb;

static void ContextBuild(benchmark::State& state) {
  const std::size_t order = state.range(0);
  for (auto _ : state) {
    SRContext ctx(IndexSet::explicit_set({1, 3, 8}), 2, order);
    benchmark::DoNotOptimize(ctx.bell(static_cast<long>(order)));
  }
}
BENCHMARK(ContextBuild)->Arg(8)->Arg(16)->Arg(32);

static void MatrixInverse(benchmark::State& state) {
  const std::size_t size = state.range(0);
  const SRContext ctx(IndexSet::odd(), 2, size);
  const TriMatrix m = matrix_second_kind(ctx, size);
  for (auto _ : state) {
    auto inv = m.inverse();
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(MatrixInverse)->Arg(9)->Arg(17)->Arg(33);

static void BellPolynomialDeterminant(benchmark::State& state) {
  const long n = state.range(0);
  const SRContext ctx(IndexSet::explicit_set({1, 3, 8}), 2, n);
  for (auto _ : state) {
    auto p = bell_polynomial_determinant(ctx, n);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BellPolynomialDeterminant)->Arg(8)->Arg(16);
