#include <benchmark/benchmark.h>

#include "nulldecomp/linalg.hpp"
#include "nulldecomp/oracles.hpp"
#include "nulldecomp/random_graphs.hpp"
#include "nulldecomp/tree_decomp.hpp"
#include "nulldecomp/unicyclic.hpp"

using namespace nulldecomp;

namespace {

Graph tree_of(std::size_t n) {
  Rng rng = instance_rng(2024, n);
  return random_tree(rng, n);
}

Graph unicyclic_of(std::size_t n) {
  Rng rng = instance_rng(2025, n);
  return random_unicyclic(rng, n);
}

void BM_RrefHilbert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(1, static_cast<unsigned long>(r + c + 1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefHilbert)->Arg(8)->Arg(16)->Arg(32);

void BM_TreeNullity(benchmark::State& state) {
  const Graph t = tree_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nullity(t));
}
BENCHMARK(BM_TreeNullity)->Arg(16)->Arg(64)->Arg(256);

void BM_Decompose(benchmark::State& state) {
  const Graph t = tree_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(t));
}
BENCHMARK(BM_Decompose)->Arg(16)->Arg(64)->Arg(256);

void BM_AnalyzeUnicyclic(benchmark::State& state) {
  const Graph g = unicyclic_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(g));
}
BENCHMARK(BM_AnalyzeUnicyclic)->Arg(16)->Arg(64)->Arg(128);

void BM_OracleIndependentSet(benchmark::State& state) {
  const Graph g = unicyclic_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracles::max_independent_set(g, 64));
}
BENCHMARK(BM_OracleIndependentSet)->Arg(16)->Arg(32)->Arg(48);

void BM_OracleMatching(benchmark::State& state) {
  const Graph g = unicyclic_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracles::max_matching(g, 64));
}
BENCHMARK(BM_OracleMatching)->Arg(16)->Arg(32)->Arg(64);

void BM_OracleEgSet(benchmark::State& state) {
  const Graph t = tree_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracles::eg_set(t, 64));
}
BENCHMARK(BM_OracleEgSet)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
