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
#ifndef MMCORESET_AGGREGATION_H_
#define MMCORESET_AGGREGATION_H_

#include <optional>
#include <string_view>

#include "mmcoreset/embedding_store.h"
#include "mmcoreset/feature_matrix.h"

namespace mmcoreset {

enum class AggregationStrategy { kConcat, kMean, kSum };

std::string_view AggregationName(AggregationStrategy strategy);
std::optional<AggregationStrategy> ParseAggregation(std::string_view name);

// Pools each sample's tokens across all modalities (modality order, then
// token order) and collapses them into one row:
//   concat: the pooled tokens flattened, width sum(t_m * d_m)
//   mean:   elementwise mean over the pooled tokens, width d
//   sum:    elementwise sum over the pooled tokens, width d
// mean and sum need every modality to share d (DimensionError otherwise).
// The mean row is computed as the sum row divided by the pooled token count.
FeatureMatrix Aggregate(const MultimodalDataset& dataset,
                        AggregationStrategy strategy);

}  // namespace mmcoreset

#endif  // MMCORESET_AGGREGATION_H_
