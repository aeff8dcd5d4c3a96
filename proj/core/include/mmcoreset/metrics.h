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
#ifndef MMCORESET_METRICS_H_
#define MMCORESET_METRICS_H_

#include <cstddef>
#include <span>

#include "mmcoreset/feature_matrix.h"

namespace mmcoreset {

// (1/n) * sum_i min_{j in coreset} ||f(x_i) - f(x_j)||^2.
// EmptyError for an empty coreset, IndexError for an out-of-range index.
double QuantizationError(const FeatureMatrix& features,
                         std::span<const std::size_t> coreset,
                         std::size_t threads = 0);

// Mean of ||f(x_i) - f(x_j)||^2 over unordered coreset pairs; 0 for fewer
// than two members.
double Diversity(const FeatureMatrix& features,
                 std::span<const std::size_t> coreset);

}  // namespace mmcoreset

#endif  // MMCORESET_METRICS_H_
