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
#ifndef MMCORESET_SAMPLER_H_
#define MMCORESET_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mmcoreset/selector.h"

namespace mmcoreset {

// SplitMix64. The exact output stream is part of the sampling contract.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

struct Coreset {
  std::size_t n_total = 0;
  std::vector<std::size_t> indices;  // strictly increasing
  double fraction = 0.0;
  std::uint64_t seed = 0;
  std::string config_fingerprint;
};

// floor(fraction * n + 1/2). ConfigError unless 0 < fraction <= 1.
std::size_t CoresetSize(double fraction, std::size_t n);

// Largest-remainder apportionment of CoresetSize(fraction, sum(sizes))
// proportional to the bin sizes; leftover units go to the largest
// fractional parts, lower bin index first on ties.
std::vector<std::size_t> Quotas(std::span<const std::size_t> bin_sizes,
                                double fraction);

// Draws quota_k samples from each bin with one SplitMix64 stream consumed
// in bin order. Within a bin the members are taken in ascending index
// order and a partial Fisher-Yates shuffle picks the first quota_k
// (step i swaps i with i + Next() % (m - i)). PartitionError on an invalid
// partition.
Coreset SampleCoreset(const BinPartition& partition, double fraction,
                      std::uint64_t seed);

// {"n", "fraction", "seed", "indices"} plus "config_fingerprint" when set.
std::string CoresetToJson(const Coreset& coreset);
void WriteCoreset(const Coreset& coreset, const std::filesystem::path& path);
Coreset ReadCoreset(const std::filesystem::path& path);

// One index per line.
void WriteCoresetIndices(const Coreset& coreset,
                         const std::filesystem::path& path);

}  // namespace mmcoreset

#endif  // MMCORESET_SAMPLER_H_
