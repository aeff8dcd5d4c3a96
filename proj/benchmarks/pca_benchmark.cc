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

#include "mmcoreset/reduction.h"

namespace {

mmcoreset::FeatureMatrix Random(std::size_t n, std::size_t d) {
  std::mt19937_64 rng(n + d);
  std::normal_distribution<double> dist;
  std::vector<double> values(n * d);
  for (double& v : values) v = dist(rng);
  return mmcoreset::FeatureMatrix(n, d, std::move(values), "bench");
}

// Covariance route: d <= n.
void BM_FitPcaCovariance(benchmark::State& state) {
  const auto f = Random(400, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mmcoreset::FitPca(f, 16).components.data());
  }
}
BENCHMARK(BM_FitPcaCovariance)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

// Gram route: d > n, as with concatenated token embeddings.
void BM_FitPcaGram(benchmark::State& state) {
  const auto f = Random(state.range(0), 20000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mmcoreset::FitPca(f, 16).components.data());
  }
}
BENCHMARK(BM_FitPcaGram)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
