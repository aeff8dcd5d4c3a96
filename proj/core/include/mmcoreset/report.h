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
#ifndef MMCORESET_REPORT_H_
#define MMCORESET_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmcoreset/embedding_store.h"
#include "mmcoreset/feature_matrix.h"
#include "mmcoreset/sampler.h"
#include "mmcoreset/selector.h"

namespace mmcoreset {

struct ModalitySummary {
  std::string name;
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t d = 0;
};

struct DatasetSummary {
  std::size_t n = 0;
  std::vector<ModalitySummary> modalities;
};

DatasetSummary Summarize(const MultimodalDataset& dataset);

struct MethodDescription {
  std::string aggregation;       // "concat", "mean", "sum"
  std::string reduction;         // "none", "pca<k>", "external"
  std::string selection_mode;    // "oracle", "accelerated"

  // e.g. "concat+pca1024+submodular"; the reduction is omitted when "none".
  std::string Label() const;
};

struct Report {
  std::string config_fingerprint;
  DatasetSummary dataset;
  std::size_t feature_dim = 0;
  MethodDescription method;
  std::size_t num_bins = 0;
  double fraction = 0.0;
  std::uint64_t seed = 0;
  std::size_t coreset_size = 0;
  double quantization_error = 0.0;
  double diversity = 0.0;
  // Wall-clock seconds per stage. Kept out of ReportToJson so that reports
  // of identical runs stay byte-identical; see TimingToJson.
  std::map<std::string, double> timing;
};

// Every pointer must be set; a missing artifact is a ReportError.
struct ReportInputs {
  std::string config_fingerprint;
  std::optional<DatasetSummary> dataset;
  std::optional<MethodDescription> method;
  const FeatureMatrix* features = nullptr;
  const BinPartition* partition = nullptr;
  const Coreset* coreset = nullptr;
  std::map<std::string, double> timing;
};

Report BuildReport(const ReportInputs& inputs);

// Sorted keys, fixed layout.
std::string ReportToJson(const Report& report);
std::string TimingToJson(const Report& report);
void WriteReport(const Report& report, const std::filesystem::path& path);

}  // namespace mmcoreset

#endif  // MMCORESET_REPORT_H_
