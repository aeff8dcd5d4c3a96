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
#include "mmcoreset/report.h"

#include "json.hpp"
#include "mmcoreset/errors.h"
#include "mmcoreset/metrics.h"
#include "text_io.h"

namespace mmcoreset {

DatasetSummary Summarize(const MultimodalDataset& dataset) {
  DatasetSummary summary;
  summary.n = dataset.n();
  for (const EmbeddingTensor& m : dataset.modalities()) {
    summary.modalities.push_back({m.modality_name(), m.n(), m.t(), m.d()});
  }
  return summary;
}

std::string MethodDescription::Label() const {
  std::string label = aggregation;
  if (reduction != "none") label += "+" + reduction;
  return label + "+submodular";
}

Report BuildReport(const ReportInputs& inputs) {
  if (!inputs.dataset) Fail(ErrorCode::kReport, "missing dataset summary");
  if (!inputs.method) Fail(ErrorCode::kReport, "missing method description");
  if (inputs.features == nullptr) Fail(ErrorCode::kReport, "missing features");
  if (inputs.partition == nullptr) Fail(ErrorCode::kReport, "missing partition");
  if (inputs.coreset == nullptr) Fail(ErrorCode::kReport, "missing coreset");
  if (inputs.features->n() != inputs.coreset->n_total ||
      inputs.partition->n_total != inputs.coreset->n_total) {
    Fail(ErrorCode::kReport,
         "features, partition and coreset disagree on the sample count");
  }

  Report report;
  report.config_fingerprint = inputs.config_fingerprint;
  report.dataset = *inputs.dataset;
  report.feature_dim = inputs.features->d();
  report.method = *inputs.method;
  report.num_bins = inputs.partition->bins.size();
  report.fraction = inputs.coreset->fraction;
  report.seed = inputs.coreset->seed;
  report.coreset_size = inputs.coreset->indices.size();
  report.quantization_error =
      QuantizationError(*inputs.features, inputs.coreset->indices);
  report.diversity = Diversity(*inputs.features, inputs.coreset->indices);
  report.timing = inputs.timing;
  return report;
}

std::string ReportToJson(const Report& report) {
  nlohmann::json modalities = nlohmann::json::array();
  for (const ModalitySummary& m : report.dataset.modalities) {
    modalities.push_back({{"name", m.name}, {"n", m.n}, {"t", m.t}, {"d", m.d}});
  }
  const nlohmann::json doc = {
      {"config_fingerprint", report.config_fingerprint},
      {"dataset",
       {{"n", report.dataset.n},
        {"modality_count", report.dataset.modalities.size()},
        {"modalities", modalities},
        {"feature_dim", report.feature_dim}}},
      {"method",
       {{"aggregation", report.method.aggregation},
        {"reduction", report.method.reduction},
        {"selection_mode", report.method.selection_mode},
        {"label", report.method.Label()}}},
      {"num_bins", report.num_bins},
      {"fraction", report.fraction},
      {"coreset_size", report.coreset_size},
      {"metrics",
       {{"quantization_error", report.quantization_error},
        {"diversity", report.diversity}}},
      {"seeds", {{"sample", report.seed}}},
  };
  return doc.dump(2) + "\n";
}

std::string TimingToJson(const Report& report) {
  nlohmann::json doc = {{"config_fingerprint", report.config_fingerprint},
                        {"seconds", report.timing}};
  return doc.dump(2) + "\n";
}

void WriteReport(const Report& report, const std::filesystem::path& path) {
  internal::WriteTextFile(path, ReportToJson(report));
}

}  // namespace mmcoreset
