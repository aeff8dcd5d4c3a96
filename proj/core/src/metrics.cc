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
#include "mmcoreset/metrics.h"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "mmcoreset/errors.h"
#include "mmcoreset/parallel.h"

namespace mmcoreset {
namespace {

// Sorted copy so results do not depend on the caller's index order.
std::vector<std::size_t> Canonical(const FeatureMatrix& features,
                                   std::span<const std::size_t> coreset) {
  std::vector<std::size_t> sorted(coreset.begin(), coreset.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t x : sorted) {
    if (x >= features.n()) {
      Fail(ErrorCode::kIndex, "coreset index " + std::to_string(x) +
                                  " out of range for n=" +
                                  std::to_string(features.n()));
    }
  }
  return sorted;
}

}  // namespace

double QuantizationError(const FeatureMatrix& features,
                         std::span<const std::size_t> coreset,
                         std::size_t threads) {
  if (coreset.empty()) Fail(ErrorCode::kEmpty, "coreset is empty");
  const std::vector<std::size_t> members = Canonical(features, coreset);
  std::vector<double> nearest(features.n());
  ParallelFor(features.n(), ResolveThreads(threads), 64,
              [&](std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i) {
                  double best = std::numeric_limits<double>::infinity();
                  for (std::size_t j : members) {
                    best = std::min(best, SquaredDistance(features.row(i),
                                                          features.row(j)));
                  }
                  nearest[i] = best;
                }
              });
  double sum = 0.0;
  for (double v : nearest) sum += v;
  return sum / static_cast<double>(features.n());
}

double Diversity(const FeatureMatrix& features,
                 std::span<const std::size_t> coreset) {
  const std::vector<std::size_t> members = Canonical(features, coreset);
  if (members.size() < 2) return 0.0;
  double sum = 0.0;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      sum += SquaredDistance(features.row(members[a]), features.row(members[b]));
    }
  }
  const double pairs =
      static_cast<double>(members.size()) * static_cast<double>(members.size() - 1) / 2.0;
  return sum / pairs;
}

}  // namespace mmcoreset
