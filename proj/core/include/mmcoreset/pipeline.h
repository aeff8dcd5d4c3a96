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
#ifndef MMCORESET_PIPELINE_H_
#define MMCORESET_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

#include "mmcoreset/aggregation.h"
#include "mmcoreset/feature_matrix.h"
#include "mmcoreset/report.h"
#include "mmcoreset/sampler.h"
#include "mmcoreset/selector.h"

namespace mmcoreset {

enum class ReductionKind { kNone, kPca, kExternal };

struct ReductionConfig {
  ReductionKind kind = ReductionKind::kNone;
  std::size_t k = 0;            // kPca
  std::string external_path;    // kExternal, as written in the config
};

// One pipeline run. Paths are kept as written; base_dir resolves relative
// ones (the config file's directory, or the working directory).
struct PipelineConfig {
  std::string manifest;
  AggregationStrategy aggregation = AggregationStrategy::kConcat;
  ReductionConfig reduction;
  std::size_t num_bins = 20;
  double fraction = 0.2;
  std::uint64_t seed = 0;
  SelectionMode mode = SelectionMode::kAccelerated;

  std::filesystem::path base_dir;
  std::size_t threads = 0;  // not part of the fingerprint

  std::filesystem::path ManifestPath() const;
  std::filesystem::path ExternalFeaturesPath() const;
};

// ConfigError on out-of-range fields (fraction outside (0,1], num_bins < 1,
// pca with k < 1, external without a path).
void ValidateConfig(const PipelineConfig& config);

// Parses the JSON config document. Missing fields take the defaults above.
PipelineConfig ParseConfig(const std::string& json_text,
                           const std::filesystem::path& base_dir);
PipelineConfig ReadConfig(const std::filesystem::path& path);

// Compact JSON with sorted keys and every field spelled out; the input to
// the fingerprint.
std::string CanonicalConfigJson(const PipelineConfig& config);

// 16 lowercase hex digits of FNV-1a 64 over CanonicalConfigJson.
std::string ConfigFingerprint(const PipelineConfig& config);

MethodDescription DescribeMethod(const PipelineConfig& config);

struct PipelineResult {
  FeatureMatrix features;
  BinPartition partition;
  Coreset coreset;
  Report report;
};

// load -> aggregate -> reduce -> select -> sample -> report, then writes
// partition.json, coreset.json, coreset.txt, report.json and timing.json to
// out_dir. Stage failures are rethrown with the stage name prepended; files
// already written by a failed run are removed.
PipelineResult RunPipeline(const PipelineConfig& config,
                           const std::filesystem::path& out_dir);

// The individual stages, shared by RunPipeline and the CLI subcommands.
FeatureMatrix AggregateStage(const PipelineConfig& config,
                             const MultimodalDataset& dataset);
FeatureMatrix ReduceStage(const PipelineConfig& config,
                          const FeatureMatrix& features);
BinPartition SelectStage(const PipelineConfig& config,
                         const FeatureMatrix& features);
Coreset SampleStage(const PipelineConfig& config, const BinPartition& partition);

struct Diagnostics {
  int exit_code = 0;
  std::string text;
};

// Per-modality shape, finiteness and alignment checks. exit_code is 0 iff the
// dataset loads; on failure the text names the error (e.g. AlignmentError).
Diagnostics ValidateInputs(const std::filesystem::path& manifest_path);

}  // namespace mmcoreset

#endif  // MMCORESET_PIPELINE_H_
