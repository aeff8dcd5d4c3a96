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
#ifndef MMCORESET_FEATURE_MATRIX_H_
#define MMCORESET_FEATURE_MATRIX_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mmcoreset/embedding_store.h"

namespace mmcoreset {

// Per-sample feature vectors f(x), n rows of width d, all finite.
// provenance describes how the rows were produced, e.g. "concat+pca4".
class FeatureMatrix {
 public:
  FeatureMatrix(std::size_t n, std::size_t d, std::vector<double> values,
                std::string provenance);

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  std::span<const double> values() const { return values_; }
  const std::string& provenance() const { return provenance_; }

  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(values_).subspan(i * d_, d_);
  }

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<double> values_;
  std::string provenance_;
};

// Squared Euclidean distance with a fixed summation order.
double SquaredDistance(std::span<const double> a, std::span<const double> b);

// Stored as an MMEB tensor with t=1; the provenance goes in the name field.
EmbeddingTensor ToTensor(const FeatureMatrix& features);
FeatureMatrix FromTensor(const EmbeddingTensor& tensor);

void WriteFeatureMatrix(const FeatureMatrix& features,
                        const std::filesystem::path& path);
// Tensors with t > 1 are flattened per sample.
FeatureMatrix ReadFeatureMatrix(const std::filesystem::path& path);

}  // namespace mmcoreset

#endif  // MMCORESET_FEATURE_MATRIX_H_
