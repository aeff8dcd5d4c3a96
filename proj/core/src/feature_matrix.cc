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
#include "mmcoreset/feature_matrix.h"

#include <cmath>
#include <utility>

#include "mmcoreset/errors.h"

namespace mmcoreset {

FeatureMatrix::FeatureMatrix(std::size_t n, std::size_t d,
                             std::vector<double> values, std::string provenance)
    : n_(n), d_(d), values_(std::move(values)), provenance_(std::move(provenance)) {
  if (n_ == 0 || d_ == 0) Fail(ErrorCode::kData, "feature matrix must be non-empty");
  if (values_.size() % n_ != 0 || values_.size() / n_ != d_) {
    Fail(ErrorCode::kData, "feature matrix holds " +
                               std::to_string(values_.size()) +
                               " values, expected n*d");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      Fail(ErrorCode::kData,
           "non-finite feature at flat index " + std::to_string(i));
    }
  }
}

double SquaredDistance(std::span<const double> a, std::span<const double> b) {
  // Four interleaved partial sums, combined in a fixed order.
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  const std::size_t d = a.size();
  std::size_t j = 0;
  for (; j + 4 <= d; j += 4) {
    const double e0 = a[j] - b[j];
    const double e1 = a[j + 1] - b[j + 1];
    const double e2 = a[j + 2] - b[j + 2];
    const double e3 = a[j + 3] - b[j + 3];
    s0 += e0 * e0;
    s1 += e1 * e1;
    s2 += e2 * e2;
    s3 += e3 * e3;
  }
  for (; j < d; ++j) {
    const double e = a[j] - b[j];
    s0 += e * e;
  }
  return (s0 + s1) + (s2 + s3);
}

EmbeddingTensor ToTensor(const FeatureMatrix& features) {
  return EmbeddingTensor(
      features.provenance(), features.n(), 1, features.d(),
      std::vector<double>(features.values().begin(), features.values().end()));
}

FeatureMatrix FromTensor(const EmbeddingTensor& tensor) {
  return FeatureMatrix(
      tensor.n(), tensor.t() * tensor.d(),
      std::vector<double>(tensor.values().begin(), tensor.values().end()),
      tensor.modality_name());
}

void WriteFeatureMatrix(const FeatureMatrix& features,
                        const std::filesystem::path& path) {
  WriteEmbeddingTensor(ToTensor(features), path, StorageType::kF64);
}

FeatureMatrix ReadFeatureMatrix(const std::filesystem::path& path) {
  return FromTensor(ReadEmbeddingTensor(path));
}

}  // namespace mmcoreset
