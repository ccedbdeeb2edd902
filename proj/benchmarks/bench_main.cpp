// Copyright 2026 The levyexit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "levyexit/levyexit.hpp"

namespace {

using namespace levyexit;

ProblemSpec skewed(double alpha) {
  ProblemSpec spec;
  spec.stable.alpha = alpha;
  spec.stable.beta = 0.5;
  return spec;
}

void BM_Assemble(benchmark::State& state) {
  const ProblemSpec spec = skewed(1.5);
  const Grid grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_operator(spec, grid));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Assemble)->RangeMultiplier(2)->Range(80, 640)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Gmres(benchmark::State& state) {
  const ProblemSpec spec = skewed(state.range(1) / 10.0);
  const DenseSystem system = assemble_system(spec, Grid(static_cast<int>(state.range(0))));
  int iterations = 0;
  for (auto _ : state) {
    const SolveResult result = gmres_solve(system.matrix, system.rhs);
    iterations = result.stats.iterations;
    benchmark::DoNotOptimize(result.x.data());
  }
  state.counters["iterations"] = iterations;
}
BENCHMARK(BM_Gmres)->ArgsProduct({{80, 160, 320}, {5, 15}})->Unit(benchmark::kMillisecond);

void BM_Direct(benchmark::State& state) {
  const DenseSystem system = assemble_system(skewed(1.5), Grid(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(direct_solve(system.matrix, system.rhs));
  }
}
BENCHMARK(BM_Direct)->RangeMultiplier(2)->Range(80, 640)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const ProblemSpec spec = skewed(state.range(0) / 10.0);
  McConfig config;
  config.n_paths = 1000;
  config.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_exit(spec, 0.0, config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.n_paths));
}
BENCHMARK(BM_MonteCarlo)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_SampleStable(benchmark::State& state) {
  StableParams params;
  params.alpha = state.range(0) / 10.0;
  params.beta = 0.5;
  PathRng rng(1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_stable(params, rng));
  }
}
BENCHMARK(BM_SampleStable)->Arg(5)->Arg(10)->Arg(15);

}  // namespace

BENCHMARK_MAIN();
