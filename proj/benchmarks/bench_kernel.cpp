#include "fracdpg/fractional_kernel.hpp"
#include "fracdpg/time_mesh.hpp"

#include <benchmark/benchmark.h>

using namespace fracdpg;

namespace {

void BM_HistoryBlockAdjacent(benchmark::State& state) {
  const TemporalBasis basis(static_cast<int>(state.range(0)));
  const FractionalParams params(0.3);
  const TimeMesh mesh = TimeMesh::graded(2.5, 100, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(history_block_disjoint(params, mesh.slab(50), mesh.slab(51), basis));
}
BENCHMARK(BM_HistoryBlockAdjacent)->DenseRange(1, 4);

void BM_HistoryBlockDistant(benchmark::State& state) {
  const TemporalBasis basis(static_cast<int>(state.range(0)));
  const FractionalParams params(0.3);
  const TimeMesh mesh = TimeMesh::graded(2.5, 100, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(history_block_disjoint(params, mesh.slab(3), mesh.slab(90), basis));
}
BENCHMARK(BM_HistoryBlockDistant)->DenseRange(1, 4);

void BM_HistoryBlockLocal(benchmark::State& state) {
  const TemporalBasis basis(static_cast<int>(state.range(0)));
  const FractionalParams params(0.3);
  const Interval slab(0.2, 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(history_block_local(params, slab, basis));
}
BENCHMARK(BM_HistoryBlockLocal)->DenseRange(1, 4);

}  // namespace
