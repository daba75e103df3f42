// Copyright 2026 The ifom Authors
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

#include <cmath>

#include "ifom/min_solvers.h"
#include "ifom/oracles.h"
#include "ifom/probe.h"
#include "ifom/problems.h"
#include "ifom/rates.h"
#include "ifom/saddle_solvers.h"

namespace ifom {
namespace {

void BM_SphereQuery(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const MinProblem p = NesterovWorst(d, 1.0, 100.0);
  InexactOracle oracle = InexactOracle::ForMin(p, SpherePolicy{0.1, 1});
  const Vector x = Vector::Ones(d);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.Query(x));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SphereQuery)->Arg(10)->Arg(100)->Arg(1000);

void BM_MantissaQuery(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const MinProblem p = NesterovWorst(d, 1.0, 100.0);
  InexactOracle oracle = InexactOracle::ForMin(p, MantissaPolicy{23});
  const Vector x = Vector::Ones(d);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.Query(x));
}
BENCHMARK(BM_MantissaQuery)->Arg(100)->Arg(1000);

void BM_GreedyDescentQuery(benchmark::State& state) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  InexactOracle oracle = InexactOracle::ForSaddle(sp, GreedyPolicy{0.05, {}, 256});
  const Vector z = DefaultScanStart(sp);
  const StepHint hint = StepHint::Descent(z, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.Query(z, hint));
}
BENCHMARK(BM_GreedyDescentQuery);

void BM_ReagmRun(benchmark::State& state) {
  const MinProblem p = NesterovWorst(100, 1.0, 100.0);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    InexactOracle oracle = InexactOracle::ForMin(p, SpherePolicy{1.0 / 30.0, 1});
    benchmark::DoNotOptimize(ReagmRun(p, oracle, Vector::Zero(100), n));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ReagmRun)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_StmRun(benchmark::State& state) {
  const MinProblem p = NesterovWorst(100, 1.0, 100.0);
  for (auto _ : state) {
    InexactOracle oracle = InexactOracle::ForMin(p, ExactPolicy{});
    benchmark::DoNotOptimize(StmRun(p, oracle, Vector::Zero(100), 2000));
  }
}
BENCHMARK(BM_StmRun)->Unit(benchmark::kMillisecond);

void BM_SaddleRun(benchmark::State& state, SaddleAlgorithm alg,
                  NoisePolicy policy) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  const Vector z0 = DefaultScanStart(sp);
  for (auto _ : state) {
    InexactOracle oracle = InexactOracle::ForSaddle(sp, policy);
    benchmark::DoNotOptimize(RunSaddleAlgorithm(alg, sp, oracle, z0, 0.05, 5000));
  }
  state.SetItemsProcessed(state.iterations() * 5000);
}
BENCHMARK_CAPTURE(BM_SaddleRun, sim_sphere, SaddleAlgorithm::kSimGda,
                  NoisePolicy{SpherePolicy{0.05, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SaddleRun, alt_greedy, SaddleAlgorithm::kAltGda,
                  NoisePolicy{GreedyPolicy{0.05, {}, 256}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SaddleRun, eg_greedy, SaddleAlgorithm::kEg,
                  NoisePolicy{GreedyPolicy{0.05, {}, 256}})
    ->Unit(benchmark::kMillisecond);

void BM_SmallScan(benchmark::State& state) {
  const SaddleProblem sp = EpsilonSaddle(0.1);
  ScanConfig config;
  config.alpha_grid = DefaultAlphaGrid(SaddleAlgorithm::kSimGda, sp.mu, sp.lip, 4);
  config.step_grid = DefaultStepGrid(sp.lip, 8);
  config.iterations = 1000;
  config.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(AlphaThresholdScan(sp, config));
}
BENCHMARK(BM_SmallScan)->Unit(benchmark::kMillisecond);

void BM_EgBestThreshold(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(EgBestThreshold(1.0, 100.0));
}
BENCHMARK(BM_EgBestThreshold);

}  // namespace
}  // namespace ifom

BENCHMARK_MAIN();
