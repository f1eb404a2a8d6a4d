#include <benchmark/benchmark.h>

#include "srcomb/graph.hpp"
#include "srcomb/posets.hpp"
#include "srcomb/stirling.hpp"

using namespace srcomb;

static void PartitionOracle(benchmark::State& state) {
  const long n = state.range(0);
  const SRContext ctx(IndexSet::all(), 2, 10);
  for (auto _ : state) {
    auto counts = oracle_partition_counts(ctx, n);
    benchmark::DoNotOptimize(counts);
  }
}
BENCHMARK(PartitionOracle)->Arg(6)->Arg(8)->Arg(10);

static void PermutationOracle(benchmark::State& state) {
  const long n = state.range(0);
  const SRContext ctx(IndexSet::odd(), 1, 8);
  for (auto _ : state) {
    auto counts = oracle_permutation_counts(ctx, n);
    benchmark::DoNotOptimize(counts);
  }
}
BENCHMARK(PermutationOracle)->Arg(5)->Arg(7)->Arg(8);

static void PosetBuild(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    auto poset = PartitionPairPoset::build(IndexSet::odd(), 2, n);
    benchmark::DoNotOptimize(poset.poset.size());
  }
}
BENCHMARK(PosetBuild)->Arg(4)->Arg(5)->Arg(6);

static void MobiusVector(benchmark::State& state) {
  const auto poset = PartitionPairPoset::build(IndexSet::odd(), 2, state.range(0));
  for (auto _ : state) {
    auto mu = poset.poset.mobius_from_bottom();
    benchmark::DoNotOptimize(mu);
  }
}
BENCHMARK(MobiusVector)->Arg(4)->Arg(5)->Arg(6);

static void AcyclicOrientations(benchmark::State& state) {
  const Graph g = Graph::complete_bipartite(state.range(0), state.range(1));
  for (auto _ : state) {
    auto count = count_acyclic_orientations(g);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(AcyclicOrientations)->Args({2, 3})->Args({3, 3})->Args({4, 4});

static void ConstrainedOrientations(benchmark::State& state) {
  for (auto _ : state) {
    auto count = count_constrained_orientations(2, 2, 1, IndexSet::odd());
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(ConstrainedOrientations);
