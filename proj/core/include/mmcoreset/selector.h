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
#ifndef MMCORESET_SELECTOR_H_
#define MMCORESET_SELECTOR_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmcoreset/feature_matrix.h"

namespace mmcoreset {

enum class SelectionMode {
  kOracle,       // every gain recomputed from the double sum
  kAccelerated,  // running per-candidate sums, gain = 2A - T
};

std::string_view SelectionModeName(SelectionMode mode);
std::optional<SelectionMode> ParseSelectionMode(std::string_view name);

struct SelectorConfig {
  std::size_t num_bins = 20;
  SelectionMode mode = SelectionMode::kAccelerated;
  std::size_t threads = 0;  // 0 = hardware concurrency
};

// N disjoint bins covering 0..n_total-1. Each bin lists samples in the order
// they were picked; gains[k][s] is the gain of the s-th pick of bin k (empty
// when the partition was read from disk).
struct BinPartition {
  std::size_t n_total = 0;
  std::vector<std::vector<std::size_t>> bins;
  std::vector<std::vector<double>> gains;
};

// Sizes of the N bins for n samples: the first n mod N bins get ceil(n/N),
// the rest floor(n/N).
std::vector<std::size_t> BinSchedule(std::size_t n, std::size_t num_bins);

// Sum over selected of ||f(p) - f(x)||^2 minus the sum over
// universe \ selected of the same. IndexError unless x is in universe and
// not in selected.
double ComputeGainDirect(const FeatureMatrix& features,
                         std::span<const std::size_t> selected,
                         std::span<const std::size_t> universe,
                         std::size_t candidate);

// Incremental gain bookkeeping for one bin. total(x) is fixed once per bin,
// accumulated(x) grows by one squared distance per pick.
class GainState {
 public:
  GainState(const FeatureMatrix& features, std::vector<std::size_t> pool,
            std::size_t threads = 1);

  const std::vector<std::size_t>& pool() const { return pool_; }
  const std::vector<std::size_t>& current_bin() const { return current_bin_; }
  // pool minus current_bin, ascending.
  const std::vector<std::size_t>& candidates() const { return candidates_; }

  double total(std::size_t x) const { return total_[x]; }
  double accumulated(std::size_t x) const { return accumulated_[x]; }
  double gain(std::size_t x) const {
    return 2.0 * accumulated_[x] - total_[x];
  }

  // Moves x from the candidates into the current bin. IndexError if x is not
  // a remaining candidate.
  void Update(std::size_t newly_selected);

  // Index of the highest-gain candidate, lowest index on ties; fills gains
  // aligned with candidates().
  std::size_t ArgMax(std::vector<double>& gains) const;

 private:
  enum class Slot : std::uint8_t { kOutside, kCandidate, kSelected };

  const FeatureMatrix* features_;
  std::size_t threads_;
  std::vector<std::size_t> pool_;
  std::vector<std::size_t> current_bin_;
  std::vector<std::size_t> candidates_;
  std::vector<Slot> slot_;
  std::vector<double> total_;
  std::vector<double> accumulated_;
};

// Observer payload for each greedy step, emitted before the pick is applied.
struct SelectionStep {
  std::size_t bin = 0;
  std::size_t step = 0;
  std::span<const std::size_t> pool;
  std::span<const std::size_t> current_bin;
  std::span<const std::size_t> candidates;
  std::span<const double> gains;  // aligned with candidates
  const GainState* state = nullptr;  // null in oracle mode
  std::size_t chosen = 0;
  double chosen_gain = 0.0;
};

using SelectionObserver = std::function<void(const SelectionStep&)>;

// Builds bins 1..N in order. Bin k draws from the samples not in earlier
// bins, and is filled to its scheduled size by repeatedly taking the argmax
// of the gain with selected = the bin so far and universe = that residual
// pool. Ties go to the lowest sample index. Both modes return identical
// partitions. ConfigError unless 1 <= num_bins <= n.
BinPartition SelectBins(const FeatureMatrix& features,
                        const SelectorConfig& config,
                        const SelectionObserver& observer = {});

// PartitionError unless the bins are non-empty, disjoint and cover
// 0..n_total-1.
void ValidatePartition(const BinPartition& partition);

// {"n", "num_bins", "bins"} plus "config_fingerprint" when given. Keys are
// sorted so the serialization is stable.
std::string PartitionToJson(const BinPartition& partition,
                            const std::string& config_fingerprint = {});
void WritePartition(const BinPartition& partition,
                    const std::filesystem::path& path,
                    const std::string& config_fingerprint = {});
BinPartition ReadPartition(const std::filesystem::path& path);

}  // namespace mmcoreset

#endif  // MMCORESET_SELECTOR_H_
