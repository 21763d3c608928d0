// Parallel solver against the serial reference on the construction families.

#include <benchmark/benchmark.h>

#include "necklace/constructions.hpp"
#include "necklace/solver.hpp"

using namespace necklace;

namespace {

Necklace simple3() { return gen_simple({3}); }
Necklace dust_small() { return gen_dust(DustParams::desk(2, {1, 4}, 0)); }

void BM_Reference_Simple3(benchmark::State& state) {
  const Necklace l = simple3();
  for (auto _ : state) benchmark::DoNotOptimize(solve_reference(l, Model::Hetero, false).covered);
}
BENCHMARK(BM_Reference_Simple3)->Unit(benchmark::kMillisecond);

void BM_Solve_Simple3(benchmark::State& state) {
  const Necklace l = simple3();
  SolveOptions opts;
  opts.want_witness = false;
  opts.pruning = state.range(0) != 0;
  opts.worker_count = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(solve(l, Model::Hetero, opts).covered);
}
BENCHMARK(BM_Solve_Simple3)->ArgsProduct({{0, 1}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_Reference_DustDesk1024(benchmark::State& state) {
  const Necklace l = dust_small();
  for (auto _ : state) benchmark::DoNotOptimize(solve_reference(l, Model::Hetero, false).covered);
}
BENCHMARK(BM_Reference_DustDesk1024)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_Solve_DustDesk1024(benchmark::State& state) {
  const Necklace l = dust_small();
  SolveOptions opts;
  opts.want_witness = false;
  opts.pruning = state.range(0) != 0;
  opts.worker_count = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(solve(l, Model::Hetero, opts).covered);
}
BENCHMARK(BM_Solve_DustDesk1024)->ArgsProduct({{0, 1}, {1, 4}})->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_RotationBound(benchmark::State& state) {
  const DenseWord w = dust_small().dense();
  for (auto _ : state) benchmark::DoNotOptimize(rotation_upper_bound(w, Model::Hetero));
}
BENCHMARK(BM_RotationBound)->Unit(benchmark::kMicrosecond);

void BM_NestedPairsKernel(benchmark::State& state) {
  const DenseWord w = dust_small().dense();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::nested_pairs(w, Model::Hetero));
}
BENCHMARK(BM_NestedPairsKernel)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
