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
#ifndef MMCORESET_REDUCTION_H_
#define MMCORESET_REDUCTION_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "mmcoreset/feature_matrix.h"

namespace mmcoreset {

// Principal axes of a feature matrix. components is k x d row-major with
// orthonormal rows in descending order of explained variance; each row's
// largest-magnitude entry is positive (lowest index wins a magnitude tie).
struct PcaModel {
  std::size_t k = 0;
  std::size_t d = 0;
  std::vector<double> mean;
  std::vector<double> components;
  std::vector<double> explained_variance;

  std::span<const double> component(std::size_t i) const {
    return std::span<const double>(components).subspan(i * d, d);
  }
};

enum class PcaRoute {
  kAuto,        // covariance when d <= n, Gram otherwise
  kCovariance,  // eigendecompose the d x d sample covariance
  kGram,        // eigendecompose the n x n centered Gram matrix
};

struct PcaOptions {
  PcaRoute route = PcaRoute::kAuto;
  std::size_t threads = 0;
};

// Fits the top-k principal directions with sample covariance (divisor n-1).
// Requires n >= 2 and 1 <= k <= min(n-1, d) (RankError). Data with zero
// total variance raises DegenerateError, as does a Gram-route fit asking for
// more components than the data's numerical rank.
PcaModel FitPca(const FeatureMatrix& features, std::size_t k,
                const PcaOptions& options = {});

// Row i of the result is components * (row_i - mean).
FeatureMatrix PcaTransform(const PcaModel& model, const FeatureMatrix& features);

// Writes <path> as a JSON header plus <stem>.mean.mmeb and
// <stem>.components.mmeb next to it.
void WritePcaModel(const PcaModel& model, const std::filesystem::path& path);
PcaModel ReadPcaModel(const std::filesystem::path& path);

}  // namespace mmcoreset

#endif  // MMCORESET_REDUCTION_H_
