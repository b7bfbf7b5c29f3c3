// Copyright 2026 The schoolchoice Authors
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

#include "schoolchoice/gda.h"
#include "schoolchoice/instances.h"
#include "schoolchoice/oracle.h"
#include "schoolchoice/prob.h"

namespace schoolchoice {
namespace {

Instance Random(int n, std::uint64_t seed) {
  RandomSpec spec;
  spec.n = n;
  spec.m = n;
  spec.seed = seed;
  return GenRandom(spec);
}

void BM_ProsExact2F(benchmark::State& state) {
  const Instance inst = Random(static_cast<int>(state.range(0)), 7);
  const Matching m = RunGda(inst, Strategy::kHeuf).matching;
  for (auto _ : state) benchmark::DoNotOptimize(ProsExact2F(inst, m));
}
BENCHMARK(BM_ProsExact2F)->Arg(3)->Arg(6)->Arg(12);

void BM_ProsMonteCarlo(benchmark::State& state) {
  const Instance inst = Random(4, 7);
  const Matching m = RunGda(inst, Strategy::kHeuf).matching;
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ProsMonteCarlo(inst, m, samples, 42));
}
BENCHMARK(BM_ProsMonteCarlo)->Arg(1000)->Arg(100000);

void BM_RunGda(benchmark::State& state) {
  const Instance inst = Random(static_cast<int>(state.range(0)), 11);
  const auto strategy = static_cast<Strategy>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(RunGda(inst, strategy));
  state.SetLabel(StrategyName(strategy));
}
BENCHMARK(BM_RunGda)->ArgsProduct({{4, 8}, {0, 1, 2, 3}});

void BM_OptimalPros(benchmark::State& state) {
  const Instance inst = Random(static_cast<int>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(OptimalPros(inst));
}
BENCHMARK(BM_OptimalPros)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_AuditIc(benchmark::State& state) {
  const Instance inst = Random(3, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(AuditIc(inst, Strategy::kLoicv, IcLevel::kRatio));
  }
}
BENCHMARK(BM_AuditIc)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace schoolchoice

BENCHMARK_MAIN();
