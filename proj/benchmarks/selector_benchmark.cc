// Copyright 2026 The Authors.
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

#include <random>
#include <vector>

#include "mmcoreset/selector.h"

namespace {

mmcoreset::FeatureMatrix Random(std::size_t n, std::size_t d) {
  std::mt19937_64 rng(n * 31 + d);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> values(n * d);
  for (double& v : values) v = dist(rng);
  return mmcoreset::FeatureMatrix(n, d, std::move(values), "bench");
}

void BM_SelectAccelerated(benchmark::State& state) {
  const auto f = Random(state.range(0), state.range(1));
  for (auto _ : state) {
    auto p = mmcoreset::SelectBins(f, {20, mmcoreset::SelectionMode::kAccelerated, 0});
    benchmark::DoNotOptimize(p.bins.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SelectAccelerated)
    ->Args({500, 64})
    ->Args({1000, 64})
    ->Args({2000, 64})
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_SelectOracle(benchmark::State& state) {
  const auto f = Random(state.range(0), 8);
  for (auto _ : state) {
    auto p = mmcoreset::SelectBins(f, {4, mmcoreset::SelectionMode::kOracle, 1});
    benchmark::DoNotOptimize(p.bins.data());
  }
}
BENCHMARK(BM_SelectOracle)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_GainStateUpdate(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto f = Random(n, 128);
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (auto _ : state) {
    state.PauseTiming();
    mmcoreset::GainState gains(f, pool, 1);
    state.ResumeTiming();
    for (std::size_t x = 0; x < 16; ++x) gains.Update(x);
  }
}
BENCHMARK(BM_GainStateUpdate)->Arg(2000)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
