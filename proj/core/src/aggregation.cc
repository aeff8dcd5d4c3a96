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
#include "mmcoreset/aggregation.h"

#include <string>
#include <vector>

#include "mmcoreset/errors.h"

namespace mmcoreset {

std::string_view AggregationName(AggregationStrategy strategy) {
  switch (strategy) {
    case AggregationStrategy::kConcat:
      return "concat";
    case AggregationStrategy::kMean:
      return "mean";
    case AggregationStrategy::kSum:
      return "sum";
  }
  return "unknown";
}

std::optional<AggregationStrategy> ParseAggregation(std::string_view name) {
  if (name == "concat") return AggregationStrategy::kConcat;
  if (name == "mean") return AggregationStrategy::kMean;
  if (name == "sum") return AggregationStrategy::kSum;
  return std::nullopt;
}

FeatureMatrix Aggregate(const MultimodalDataset& dataset,
                        AggregationStrategy strategy) {
  const auto& modalities = dataset.modalities();
  const std::size_t n = dataset.n();

  if (strategy == AggregationStrategy::kConcat) {
    std::size_t width = 0;
    for (const EmbeddingTensor& m : modalities) width += m.t() * m.d();
    std::vector<double> values;
    values.reserve(n * width);
    for (std::size_t i = 0; i < n; ++i) {
      for (const EmbeddingTensor& m : modalities) {
        auto s = m.sample(i);
        values.insert(values.end(), s.begin(), s.end());
      }
    }
    return FeatureMatrix(n, width, std::move(values), "concat");
  }

  const std::size_t d = modalities.front().d();
  std::size_t tokens = 0;
  for (const EmbeddingTensor& m : modalities) {
    if (m.d() != d) {
      Fail(ErrorCode::kDimension,
           std::string(AggregationName(strategy)) +
               " aggregation needs equal widths, but '" + m.modality_name() +
               "' has d=" + std::to_string(m.d()) + " and '" +
               modalities.front().modality_name() + "' has d=" +
               std::to_string(d));
    }
    tokens += m.t();
  }

  std::vector<double> values(n * d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = values.data() + i * d;
    for (const EmbeddingTensor& m : modalities) {
      auto s = m.sample(i);
      for (std::size_t tok = 0; tok < m.t(); ++tok) {
        for (std::size_t j = 0; j < d; ++j) row[j] += s[tok * d + j];
      }
    }
    if (strategy == AggregationStrategy::kMean) {
      for (std::size_t j = 0; j < d; ++j) row[j] /= static_cast<double>(tokens);
    }
  }
  return FeatureMatrix(n, d, std::move(values),
                       std::string(AggregationName(strategy)));
}

}  // namespace mmcoreset
