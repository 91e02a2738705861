// SPDX-License-Identifier: Apache-2.0
// Serial reference against OpenMP kernels. Argument 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "lrep/dp.hpp"
#include "lrep/generators.hpp"
#include "lrep/oracle.hpp"
#include "lrep/walls.hpp"

namespace {

lrep::Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? lrep::Execution::kSerial : lrep::Execution::kParallel;
}

lrep::Instance forest_instance(int n, double p, std::uint64_t seed, int k) {
  lrep::Instance inst;
  inst.g = lrep::random_graph(n, p, seed);
  inst.k = k;
  inst.action = lrep::catalog("vDel");
  inst.f = lrep::builtin_class("forests");
  return inst;
}

void BM_BruteForce(benchmark::State& state) {
  auto inst = forest_instance(9, 0.45, 7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lrep::solve_brute(inst, exec_of(state)));
}
BENCHMARK(BM_BruteForce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DynamicProgram(benchmark::State& state) {
  auto inst = forest_instance(12, 0.3, 11, 3);
  for (auto _ : state) {
    lrep::DpOptions opt;
    opt.exec = exec_of(state);
    opt.mode = lrep::DpMode::kExactCarry;
    benchmark::DoNotOptimize(lrep::run_dp(inst, opt));
  }
}
BENCHMARK(BM_DynamicProgram)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FlowDetection(benchmark::State& state) {
  auto aw = lrep::apex_wall(9, 4, 20, 30, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(lrep::detect_high_flow_vertices(aw.graph, aw.wall, 20, exec_of(state)));
}
BENCHMARK(BM_FlowDetection)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
