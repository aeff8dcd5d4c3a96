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
#include "mmcoreset/selector.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "json.hpp"
#include "mmcoreset/errors.h"
#include "mmcoreset/parallel.h"
#include "text_io.h"

namespace mmcoreset {
namespace {

// Candidates per thread below which a scan stays on the calling thread.
constexpr std::size_t kMinChunk = 256;

struct Best {
  double gain;
  std::size_t index;
};

// Order-independent: higher gain wins, then lower index.
bool Better(const Best& a, const Best& b) {
  return a.gain > b.gain || (a.gain == b.gain && a.index < b.index);
}

}  // namespace

std::string_view SelectionModeName(SelectionMode mode) {
  return mode == SelectionMode::kOracle ? "oracle" : "accelerated";
}

std::optional<SelectionMode> ParseSelectionMode(std::string_view name) {
  if (name == "oracle") return SelectionMode::kOracle;
  if (name == "accelerated") return SelectionMode::kAccelerated;
  return std::nullopt;
}

std::vector<std::size_t> BinSchedule(std::size_t n, std::size_t num_bins) {
  if (num_bins < 1 || num_bins > n) {
    Fail(ErrorCode::kConfig, "num_bins=" + std::to_string(num_bins) +
                                 " must be in [1, n=" + std::to_string(n) + "]");
  }
  std::vector<std::size_t> sizes(num_bins, n / num_bins);
  for (std::size_t k = 0; k < n % num_bins; ++k) ++sizes[k];
  return sizes;
}

double ComputeGainDirect(const FeatureMatrix& features,
                         std::span<const std::size_t> selected,
                         std::span<const std::size_t> universe,
                         std::size_t candidate) {
  if (std::find(universe.begin(), universe.end(), candidate) == universe.end()) {
    Fail(ErrorCode::kIndex,
         "candidate " + std::to_string(candidate) + " is not in the universe");
  }
  if (std::find(selected.begin(), selected.end(), candidate) != selected.end()) {
    Fail(ErrorCode::kIndex,
         "candidate " + std::to_string(candidate) + " is already selected");
  }
  const auto x = features.row(candidate);
  double inside = 0.0;
  for (std::size_t p : selected) inside += SquaredDistance(features.row(p), x);
  double outside = 0.0;
  for (std::size_t p : universe) {
    if (std::find(selected.begin(), selected.end(), p) != selected.end()) continue;
    outside += SquaredDistance(features.row(p), x);
  }
  return inside - outside;
}

GainState::GainState(const FeatureMatrix& features,
                     std::vector<std::size_t> pool, std::size_t threads)
    : features_(&features),
      threads_(std::max<std::size_t>(1, threads)),
      pool_(std::move(pool)),
      slot_(features.n(), Slot::kOutside),
      total_(features.n(), 0.0),
      accumulated_(features.n(), 0.0) {
  std::sort(pool_.begin(), pool_.end());
  for (std::size_t x : pool_) {
    if (x >= features.n() || slot_[x] != Slot::kOutside) {
      Fail(ErrorCode::kIndex, "pool index " + std::to_string(x) +
                                  " is out of range or repeated");
    }
    slot_[x] = Slot::kCandidate;
  }
  candidates_ = pool_;
  // T(x): sequential sum over the pool in ascending order, per candidate.
  ParallelFor(pool_.size(), threads_, 16, [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const std::size_t x = pool_[c];
      const auto fx = features_->row(x);
      double sum = 0.0;
      for (std::size_t p : pool_) sum += SquaredDistance(features_->row(p), fx);
      total_[x] = sum;
    }
  });
}

void GainState::Update(std::size_t newly_selected) {
  if (newly_selected >= slot_.size() ||
      slot_[newly_selected] != Slot::kCandidate) {
    Fail(ErrorCode::kIndex, "index " + std::to_string(newly_selected) +
                                " is not a remaining candidate");
  }
  slot_[newly_selected] = Slot::kSelected;
  current_bin_.push_back(newly_selected);
  candidates_.erase(
      std::lower_bound(candidates_.begin(), candidates_.end(), newly_selected));
  const auto fs = features_->row(newly_selected);
  ParallelFor(candidates_.size(), threads_, kMinChunk,
              [&](std::size_t begin, std::size_t end) {
                for (std::size_t c = begin; c < end; ++c) {
                  const std::size_t x = candidates_[c];
                  accumulated_[x] += SquaredDistance(fs, features_->row(x));
                }
              });
}

std::size_t GainState::ArgMax(std::vector<double>& gains) const {
  if (candidates_.empty()) Fail(ErrorCode::kIndex, "no candidates left");
  gains.resize(candidates_.size());
  const std::size_t chunks =
      std::max<std::size_t>(1, std::min(threads_, candidates_.size() / kMinChunk));
  std::vector<Best> partial(chunks, Best{0.0, slot_.size()});
  std::vector<char> seen(chunks, 0);
  const std::size_t span = (candidates_.size() + chunks - 1) / chunks;
  ParallelFor(candidates_.size(), threads_, kMinChunk,
              [&](std::size_t begin, std::size_t end) {
                const std::size_t chunk = begin / span;
                Best best{0.0, slot_.size()};
                bool any = false;
                for (std::size_t c = begin; c < end; ++c) {
                  const std::size_t x = candidates_[c];
                  gains[c] = gain(x);
                  const Best here{gains[c], x};
                  if (!any || Better(here, best)) best = here;
                  any = true;
                }
                partial[chunk] = best;
                seen[chunk] = any ? 1 : 0;
              });
  Best best = partial.front();
  for (std::size_t i = 1; i < chunks; ++i) {
    if (seen[i] && Better(partial[i], best)) best = partial[i];
  }
  return best.index;
}

BinPartition SelectBins(const FeatureMatrix& features,
                        const SelectorConfig& config,
                        const SelectionObserver& observer) {
  const std::size_t n = features.n();
  const std::vector<std::size_t> schedule = BinSchedule(n, config.num_bins);
  const std::size_t threads = ResolveThreads(config.threads);

  BinPartition partition;
  partition.n_total = n;
  partition.bins.reserve(config.num_bins);
  partition.gains.reserve(config.num_bins);

  std::vector<std::size_t> remaining(n);
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  std::vector<double> gains;

  for (std::size_t k = 0; k < config.num_bins; ++k) {
    std::vector<std::size_t> bin;
    std::vector<double> bin_gains;
    bin.reserve(schedule[k]);
    bin_gains.reserve(schedule[k]);

    if (config.mode == SelectionMode::kAccelerated) {
      GainState state(features, remaining, threads);
      for (std::size_t s = 0; s < schedule[k]; ++s) {
        const std::size_t chosen = state.ArgMax(gains);
        const double chosen_gain = state.gain(chosen);
        if (observer) {
          observer(SelectionStep{k, s, state.pool(), state.current_bin(),
                                 state.candidates(), gains, &state, chosen,
                                 chosen_gain});
        }
        state.Update(chosen);
        bin.push_back(chosen);
        bin_gains.push_back(chosen_gain);
      }
    } else {
      std::vector<std::size_t> candidates = remaining;
      for (std::size_t s = 0; s < schedule[k]; ++s) {
        gains.resize(candidates.size());
        std::size_t best = 0;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
          gains[c] = ComputeGainDirect(features, bin, remaining, candidates[c]);
          if (gains[c] > gains[best]) best = c;
        }
        const std::size_t chosen = candidates[best];
        if (observer) {
          observer(SelectionStep{k, s, remaining, bin, candidates, gains,
                                 nullptr, chosen, gains[best]});
        }
        bin.push_back(chosen);
        bin_gains.push_back(gains[best]);
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
      }
    }

    std::vector<std::size_t> sorted_bin = bin;
    std::sort(sorted_bin.begin(), sorted_bin.end());
    std::vector<std::size_t> rest;
    rest.reserve(remaining.size() - bin.size());
    std::set_difference(remaining.begin(), remaining.end(), sorted_bin.begin(),
                        sorted_bin.end(), std::back_inserter(rest));
    remaining = std::move(rest);
    partition.bins.push_back(std::move(bin));
    partition.gains.push_back(std::move(bin_gains));
  }
  return partition;
}

void ValidatePartition(const BinPartition& partition) {
  if (partition.bins.empty()) Fail(ErrorCode::kPartition, "partition has no bins");
  std::vector<bool> seen(partition.n_total, false);
  std::size_t count = 0;
  for (std::size_t k = 0; k < partition.bins.size(); ++k) {
    if (partition.bins[k].empty()) {
      Fail(ErrorCode::kPartition, "bin " + std::to_string(k) + " is empty");
    }
    for (std::size_t x : partition.bins[k]) {
      if (x >= partition.n_total) {
        Fail(ErrorCode::kPartition, "index " + std::to_string(x) +
                                        " out of range for n=" +
                                        std::to_string(partition.n_total));
      }
      if (seen[x]) {
        Fail(ErrorCode::kPartition,
             "index " + std::to_string(x) + " appears in more than one place");
      }
      seen[x] = true;
      ++count;
    }
  }
  if (count != partition.n_total) {
    Fail(ErrorCode::kPartition, "bins cover " + std::to_string(count) + " of " +
                                    std::to_string(partition.n_total) +
                                    " samples");
  }
}

std::string PartitionToJson(const BinPartition& partition,
                            const std::string& config_fingerprint) {
  nlohmann::json doc = {
      {"n", partition.n_total},
      {"num_bins", partition.bins.size()},
      {"bins", partition.bins},
  };
  if (!config_fingerprint.empty()) doc["config_fingerprint"] = config_fingerprint;
  return doc.dump() + "\n";
}

void WritePartition(const BinPartition& partition,
                    const std::filesystem::path& path,
                    const std::string& config_fingerprint) {
  internal::WriteTextFile(path, PartitionToJson(partition, config_fingerprint));
}

BinPartition ReadPartition(const std::filesystem::path& path) {
  const nlohmann::json doc = internal::ReadJsonFile(path, ErrorCode::kPartition);
  BinPartition partition;
  try {
    partition.n_total = doc.at("n").get<std::size_t>();
    partition.bins = doc.at("bins").get<std::vector<std::vector<std::size_t>>>();
    if (doc.at("num_bins").get<std::size_t>() != partition.bins.size()) {
      Fail(ErrorCode::kPartition, "num_bins disagrees with the bins array");
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kPartition, path.string() + ": " + e.what());
  }
  ValidatePartition(partition);
  return partition;
}

}  // namespace mmcoreset
