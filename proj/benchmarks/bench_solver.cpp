#include "fracdpg/dpg_stepper.hpp"
#include "fracdpg/manufactured.hpp"

#include <benchmark/benchmark.h>

using namespace fracdpg;

namespace {

void BM_SolveExample1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ManufacturedCase mc = example1(0.2);
  const ProblemSpec problem = mc.problem();
  const TimeMesh mesh = TimeMesh::graded(1.8, n, 1.0);
  const FESpace space(40, 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve(problem, mesh, space, 1));
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveExample1)->RangeMultiplier(2)->Range(20, 160)->Complexity(benchmark::oNSquared)->Unit(benchmark::kMillisecond);

void BM_SolveExample2Quadratic(benchmark::State& state) {
  const ManufacturedCase mc = example2(0.3);
  const ProblemSpec problem = mc.problem();
  const TimeMesh mesh = TimeMesh::graded(4.2, static_cast<int>(state.range(0)), 1.0);
  const FESpace space(40, 4);
  for (auto _ : state) benchmark::DoNotOptimize(solve(problem, mesh, space, 2));
}
BENCHMARK(BM_SolveExample2Quadratic)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_AdvanceLastSlab(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ManufacturedCase mc = example1(0.5);
  const ProblemSpec problem = mc.problem();
  const TimeMesh mesh = TimeMesh::graded(2.0, n, 1.0);
  Trajectory traj = solve(problem, mesh, FESpace(20, 2), 2);
  traj.slabs.pop_back();
  for (auto _ : state) benchmark::DoNotOptimize(advance_slab(problem, traj, n));
}
BENCHMARK(BM_AdvanceLastSlab)->Arg(40)->Arg(160)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
