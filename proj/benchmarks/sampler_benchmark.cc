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

#include <numeric>

#include "mmcoreset/sampler.h"

namespace {

void BM_SampleCoreset(benchmark::State& state) {
  const std::size_t n = state.range(0);
  mmcoreset::BinPartition p;
  p.n_total = n;
  std::size_t next = 0;
  for (std::size_t size : mmcoreset::BinSchedule(n, 20)) {
    std::vector<std::size_t> bin(size);
    std::iota(bin.begin(), bin.end(), next);
    next += size;
    p.bins.push_back(std::move(bin));
  }
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mmcoreset::SampleCoreset(p, 0.2, seed++).indices.data());
  }
}
BENCHMARK(BM_SampleCoreset)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
