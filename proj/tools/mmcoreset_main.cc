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
// Command-line front end: one subcommand per pipeline stage plus the
// single-shot "pipeline" and the "validate" diagnostics mode.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mmcoreset/aggregation.h"
#include "mmcoreset/embedding_store.h"
#include "mmcoreset/errors.h"
#include "mmcoreset/feature_matrix.h"
#include "mmcoreset/pipeline.h"
#include "mmcoreset/reduction.h"
#include "mmcoreset/report.h"
#include "mmcoreset/sampler.h"
#include "mmcoreset/selector.h"

namespace {

using mmcoreset::ErrorCode;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

// Flags that override fields of the (optional) --config file.
struct ConfigFlags {
  std::string config_path;
  std::optional<std::string> manifest;
  std::optional<std::string> aggregation;
  std::optional<std::size_t> pca;
  std::optional<std::string> external;
  std::optional<std::size_t> bins;
  std::optional<std::string> mode;
  std::optional<double> fraction;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;

  void Register(CLI::App* app) {
    app->add_option("--config", config_path, "Pipeline config JSON");
    app->add_option("--manifest", manifest, "Dataset manifest JSON");
    app->add_option("--aggregation", aggregation, "concat | mean | sum");
    app->add_option("--pca", pca, "Reduce with PCA to this many components");
    app->add_option("--external-features", external,
                    "Externally reduced feature file (MMEB) replacing reduction");
    app->add_option("--bins", bins, "Number of bins");
    app->add_option("--mode", mode, "oracle | accelerated");
    app->add_option("--fraction", fraction, "Coreset fraction in (0, 1]");
    app->add_option("--seed", seed, "Sampling seed (u64)");
    app->add_option("--threads", threads, "Worker threads, 0 = all cores");
  }

  mmcoreset::PipelineConfig Build() const {
    mmcoreset::PipelineConfig config;
    if (!config_path.empty()) {
      config = mmcoreset::ReadConfig(config_path);
    } else {
      config.base_dir = std::filesystem::current_path();
    }
    if (manifest) config.manifest = *manifest;
    if (aggregation) {
      auto parsed = mmcoreset::ParseAggregation(*aggregation);
      if (!parsed) mmcoreset::Fail(ErrorCode::kConfig, "unknown aggregation '" + *aggregation + "'");
      config.aggregation = *parsed;
    }
    if (pca) {
      config.reduction = {mmcoreset::ReductionKind::kPca, *pca, {}};
    }
    if (external) {
      config.reduction = {mmcoreset::ReductionKind::kExternal, 0, *external};
    }
    if (bins) config.num_bins = *bins;
    if (mode) {
      auto parsed = mmcoreset::ParseSelectionMode(*mode);
      if (!parsed) mmcoreset::Fail(ErrorCode::kConfig, "unknown mode '" + *mode + "'");
      config.mode = *parsed;
    }
    if (fraction) config.fraction = *fraction;
    if (seed) config.seed = *seed;
    if (threads) config.threads = *threads;
    mmcoreset::ValidateConfig(config);
    return config;
  }
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfig:
      return kExitUsage;
    case ErrorCode::kInternal:
      return kExitInternal;
    default:
      return kExitData;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multimodal coreset selection by greedy submodular bin partitioning"};
  app.require_subcommand(1);

  // validate
  std::string validate_manifest;
  CLI::App* validate = app.add_subcommand("validate", "Check a dataset manifest");
  validate->add_option("--manifest", validate_manifest, "Dataset manifest JSON")
      ->required();

  // pipeline
  ConfigFlags pipeline_flags;
  std::string pipeline_out;
  CLI::App* pipeline = app.add_subcommand("pipeline", "Run every stage");
  pipeline_flags.Register(pipeline);
  pipeline->add_option("--out", pipeline_out, "Output directory")->required();

  // aggregate
  ConfigFlags aggregate_flags;
  std::string aggregate_out;
  CLI::App* aggregate = app.add_subcommand("aggregate", "Aggregate token embeddings");
  aggregate_flags.Register(aggregate);
  aggregate->add_option("--out", aggregate_out, "Feature matrix (MMEB)")->required();

  // reduce
  ConfigFlags reduce_flags;
  std::string reduce_in;
  std::string reduce_out;
  std::string reduce_model_out;
  std::string reduce_model_in;
  CLI::App* reduce = app.add_subcommand("reduce", "Apply the configured reduction");
  reduce_flags.Register(reduce);
  reduce->add_option("--features", reduce_in, "Input feature matrix (MMEB)")->required();
  reduce->add_option("--out", reduce_out, "Reduced feature matrix (MMEB)")->required();
  reduce->add_option("--model-out", reduce_model_out, "Write the fitted PCA model here");
  reduce->add_option("--apply-model", reduce_model_in,
                     "Transform with a saved PCA model instead of fitting");

  // select
  ConfigFlags select_flags;
  std::string select_in;
  std::string select_out;
  CLI::App* select = app.add_subcommand("select", "Partition features into bins");
  select_flags.Register(select);
  select->add_option("--features", select_in, "Feature matrix (MMEB)")->required();
  select->add_option("--out", select_out, "Partition JSON")->required();

  // sample
  ConfigFlags sample_flags;
  std::string sample_in;
  std::string sample_out;
  std::string sample_indices_out;
  CLI::App* sample = app.add_subcommand("sample", "Sample the coreset from bins");
  sample_flags.Register(sample);
  sample->add_option("--partition", sample_in, "Partition JSON")->required();
  sample->add_option("--out", sample_out, "Coreset JSON")->required();
  sample->add_option("--indices-out", sample_indices_out,
                     "Also write one index per line here");

  // report
  ConfigFlags report_flags;
  std::string report_features;
  std::string report_partition;
  std::string report_coreset;
  std::string report_out;
  CLI::App* report = app.add_subcommand("report", "Compute proxy metrics");
  report_flags.Register(report);
  report->add_option("--features", report_features, "Feature matrix used for selection")
      ->required();
  report->add_option("--partition", report_partition, "Partition JSON")->required();
  report->add_option("--coreset", report_coreset, "Coreset JSON")->required();
  report->add_option("--out", report_out, "Report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (validate->parsed()) {
      const mmcoreset::Diagnostics diag = mmcoreset::ValidateInputs(validate_manifest);
      (diag.exit_code == 0 ? std::cout : std::cerr) << diag.text;
      return diag.exit_code;
    }

    if (pipeline->parsed()) {
      const mmcoreset::PipelineConfig config = pipeline_flags.Build();
      const mmcoreset::PipelineResult result = mmcoreset::RunPipeline(config, pipeline_out);
      std::cout << "coreset: " << result.coreset.indices.size() << " of "
                << result.coreset.n_total << " samples ("
                << result.report.method.Label() << ", fingerprint "
                << result.report.config_fingerprint << ")\n";
      return 0;
    }

    if (aggregate->parsed()) {
      const mmcoreset::PipelineConfig config = aggregate_flags.Build();
      const mmcoreset::MultimodalDataset dataset =
          mmcoreset::LoadDataset(config.ManifestPath());
      mmcoreset::WriteFeatureMatrix(mmcoreset::AggregateStage(config, dataset),
                                    aggregate_out);
      return 0;
    }

    if (reduce->parsed()) {
      const mmcoreset::PipelineConfig config = reduce_flags.Build();
      const mmcoreset::FeatureMatrix features = mmcoreset::ReadFeatureMatrix(reduce_in);
      if (!reduce_model_in.empty()) {
        const mmcoreset::PcaModel model = mmcoreset::ReadPcaModel(reduce_model_in);
        mmcoreset::WriteFeatureMatrix(mmcoreset::PcaTransform(model, features),
                                      reduce_out);
        return 0;
      }
      if (config.reduction.kind == mmcoreset::ReductionKind::kPca) {
        mmcoreset::PcaOptions options;
        options.threads = config.threads;
        const mmcoreset::PcaModel model =
            mmcoreset::FitPca(features, config.reduction.k, options);
        if (!reduce_model_out.empty()) mmcoreset::WritePcaModel(model, reduce_model_out);
        mmcoreset::WriteFeatureMatrix(mmcoreset::PcaTransform(model, features),
                                      reduce_out);
        return 0;
      }
      mmcoreset::WriteFeatureMatrix(mmcoreset::ReduceStage(config, features), reduce_out);
      return 0;
    }

    if (select->parsed()) {
      const mmcoreset::PipelineConfig config = select_flags.Build();
      const mmcoreset::FeatureMatrix features = mmcoreset::ReadFeatureMatrix(select_in);
      mmcoreset::WritePartition(mmcoreset::SelectStage(config, features), select_out,
                                mmcoreset::ConfigFingerprint(config));
      return 0;
    }

    if (sample->parsed()) {
      const mmcoreset::PipelineConfig config = sample_flags.Build();
      const mmcoreset::Coreset coreset =
          mmcoreset::SampleStage(config, mmcoreset::ReadPartition(sample_in));
      mmcoreset::WriteCoreset(coreset, sample_out);
      if (!sample_indices_out.empty()) {
        mmcoreset::WriteCoresetIndices(coreset, sample_indices_out);
      }
      return 0;
    }

    if (report->parsed()) {
      const mmcoreset::PipelineConfig config = report_flags.Build();
      const mmcoreset::MultimodalDataset dataset =
          mmcoreset::LoadDataset(config.ManifestPath());
      const mmcoreset::FeatureMatrix features =
          mmcoreset::ReadFeatureMatrix(report_features);
      const mmcoreset::BinPartition partition = mmcoreset::ReadPartition(report_partition);
      const mmcoreset::Coreset coreset = mmcoreset::ReadCoreset(report_coreset);
      mmcoreset::ReportInputs inputs;
      inputs.config_fingerprint = mmcoreset::ConfigFingerprint(config);
      inputs.dataset = mmcoreset::Summarize(dataset);
      inputs.method = mmcoreset::DescribeMethod(config);
      inputs.features = &features;
      inputs.partition = &partition;
      inputs.coreset = &coreset;
      mmcoreset::WriteReport(mmcoreset::BuildReport(inputs), report_out);
      return 0;
    }
  } catch (const mmcoreset::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
