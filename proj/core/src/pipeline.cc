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
#include "mmcoreset/pipeline.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mmcoreset/errors.h"
#include "mmcoreset/reduction.h"
#include "text_io.h"

namespace mmcoreset {
namespace {

using Clock = std::chrono::steady_clock;

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& path) {
  const std::filesystem::path p(path);
  return p.is_relative() ? base / p : p;
}

// Runs one stage, timing it and tagging any failure with the stage name.
template <typename Fn>
auto Stage(const char* name, std::map<std::string, double>& timing, Fn&& fn) {
  const auto start = Clock::now();
  try {
    auto result = fn();
    timing[name] = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  } catch (const Error& e) {
    throw e.WithContext(std::string("stage '") + name + "'");
  }
}

std::string ReductionLabel(const ReductionConfig& reduction) {
  switch (reduction.kind) {
    case ReductionKind::kNone:
      return "none";
    case ReductionKind::kPca:
      return "pca" + std::to_string(reduction.k);
    case ReductionKind::kExternal:
      return "external";
  }
  return "none";
}

}  // namespace

std::filesystem::path PipelineConfig::ManifestPath() const {
  return Resolve(base_dir, manifest);
}

std::filesystem::path PipelineConfig::ExternalFeaturesPath() const {
  return Resolve(base_dir, reduction.external_path);
}

void ValidateConfig(const PipelineConfig& config) {
  if (!(config.fraction > 0.0 && config.fraction <= 1.0)) {
    Fail(ErrorCode::kConfig, "fraction must be in (0, 1]");
  }
  if (config.num_bins < 1) Fail(ErrorCode::kConfig, "num_bins must be >= 1");
  if (config.reduction.kind == ReductionKind::kPca && config.reduction.k < 1) {
    Fail(ErrorCode::kConfig, "pca reduction needs k >= 1");
  }
  if (config.reduction.kind == ReductionKind::kExternal &&
      config.reduction.external_path.empty()) {
    Fail(ErrorCode::kConfig, "external reduction needs a path");
  }
}

PipelineConfig ParseConfig(const std::string& json_text,
                           const std::filesystem::path& base_dir) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kConfig, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) Fail(ErrorCode::kConfig, "config must be a JSON object");

  static const std::set<std::string> kKnown = {
      "manifest", "aggregation", "reduction", "num_bins",
      "fraction", "seed",        "mode",      "threads"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKnown.contains(key)) Fail(ErrorCode::kConfig, "unknown config key '" + key + "'");
  }

  PipelineConfig config;
  config.base_dir = base_dir;
  try {
    if (doc.contains("manifest")) config.manifest = doc["manifest"].get<std::string>();
    if (doc.contains("aggregation")) {
      const std::string name = doc["aggregation"].get<std::string>();
      const auto strategy = ParseAggregation(name);
      if (!strategy) Fail(ErrorCode::kConfig, "unknown aggregation '" + name + "'");
      config.aggregation = *strategy;
    }
    if (doc.contains("reduction")) {
      const nlohmann::json& r = doc["reduction"];
      const std::string kind =
          r.is_string() ? r.get<std::string>() : r.at("kind").get<std::string>();
      if (kind == "none") {
        config.reduction.kind = ReductionKind::kNone;
      } else if (kind == "pca") {
        config.reduction.kind = ReductionKind::kPca;
        config.reduction.k = r.at("k").get<std::size_t>();
      } else if (kind == "external") {
        config.reduction.kind = ReductionKind::kExternal;
        config.reduction.external_path = r.at("path").get<std::string>();
      } else {
        Fail(ErrorCode::kConfig, "unknown reduction kind '" + kind + "'");
      }
    }
    if (doc.contains("num_bins")) config.num_bins = doc["num_bins"].get<std::size_t>();
    if (doc.contains("fraction")) config.fraction = doc["fraction"].get<double>();
    if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("mode")) {
      const std::string name = doc["mode"].get<std::string>();
      const auto mode = ParseSelectionMode(name);
      if (!mode) Fail(ErrorCode::kConfig, "unknown selection mode '" + name + "'");
      config.mode = *mode;
    }
    if (doc.contains("threads")) config.threads = doc["threads"].get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kConfig, std::string("bad config field: ") + e.what());
  }
  ValidateConfig(config);
  return config;
}

PipelineConfig ReadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str(), path.parent_path());
}

std::string CanonicalConfigJson(const PipelineConfig& config) {
  nlohmann::json reduction = {{"kind", "none"}};
  if (config.reduction.kind == ReductionKind::kPca) {
    reduction = {{"kind", "pca"}, {"k", config.reduction.k}};
  } else if (config.reduction.kind == ReductionKind::kExternal) {
    reduction = {{"kind", "external"}, {"path", config.reduction.external_path}};
  }
  const nlohmann::json doc = {
      {"manifest", config.manifest},
      {"aggregation", AggregationName(config.aggregation)},
      {"reduction", reduction},
      {"num_bins", config.num_bins},
      {"fraction", config.fraction},
      {"seed", config.seed},
      {"mode", SelectionModeName(config.mode)},
  };
  return doc.dump();
}

std::string ConfigFingerprint(const PipelineConfig& config) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : CanonicalConfigJson(config)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

MethodDescription DescribeMethod(const PipelineConfig& config) {
  return MethodDescription{std::string(AggregationName(config.aggregation)),
                           ReductionLabel(config.reduction),
                           std::string(SelectionModeName(config.mode))};
}

FeatureMatrix AggregateStage(const PipelineConfig& config,
                             const MultimodalDataset& dataset) {
  return Aggregate(dataset, config.aggregation);
}

FeatureMatrix ReduceStage(const PipelineConfig& config,
                          const FeatureMatrix& features) {
  switch (config.reduction.kind) {
    case ReductionKind::kNone:
      return features;
    case ReductionKind::kPca: {
      PcaOptions options;
      options.threads = config.threads;
      return PcaTransform(FitPca(features, config.reduction.k, options), features);
    }
    case ReductionKind::kExternal: {
      FeatureMatrix external = ReadFeatureMatrix(config.ExternalFeaturesPath());
      if (external.n() != features.n()) {
        Fail(ErrorCode::kAlignment,
             "external features have n=" + std::to_string(external.n()) +
                 " but the dataset has n=" + std::to_string(features.n()));
      }
      return external;
    }
  }
  Fail(ErrorCode::kInternal, "unhandled reduction kind");
}

BinPartition SelectStage(const PipelineConfig& config,
                         const FeatureMatrix& features) {
  return SelectBins(features, SelectorConfig{config.num_bins, config.mode,
                                             config.threads});
}

Coreset SampleStage(const PipelineConfig& config, const BinPartition& partition) {
  Coreset coreset = SampleCoreset(partition, config.fraction, config.seed);
  coreset.config_fingerprint = ConfigFingerprint(config);
  return coreset;
}

PipelineResult RunPipeline(const PipelineConfig& config,
                           const std::filesystem::path& out_dir) {
  ValidateConfig(config);
  const std::string fingerprint = ConfigFingerprint(config);
  std::map<std::string, double> timing;

  const MultimodalDataset dataset =
      Stage("load", timing, [&] { return LoadDataset(config.ManifestPath()); });
  const FeatureMatrix aggregated =
      Stage("aggregate", timing, [&] { return AggregateStage(config, dataset); });
  FeatureMatrix features =
      Stage("reduce", timing, [&] { return ReduceStage(config, aggregated); });
  BinPartition partition =
      Stage("select", timing, [&] { return SelectStage(config, features); });
  Coreset coreset =
      Stage("sample", timing, [&] { return SampleStage(config, partition); });
  Report report = Stage("report", timing, [&] {
    ReportInputs inputs;
    inputs.config_fingerprint = fingerprint;
    inputs.dataset = Summarize(dataset);
    inputs.method = DescribeMethod(config);
    inputs.features = &features;
    inputs.partition = &partition;
    inputs.coreset = &coreset;
    return BuildReport(inputs);
  });
  report.timing = timing;

  const std::vector<std::pair<std::filesystem::path, std::string>> outputs = {
      {out_dir / "partition.json", PartitionToJson(partition, fingerprint)},
      {out_dir / "coreset.json", CoresetToJson(coreset)},
      {out_dir / "report.json", ReportToJson(report)},
      {out_dir / "timing.json", TimingToJson(report)},
  };
  std::vector<std::filesystem::path> written;
  try {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) Fail(ErrorCode::kIo, "cannot create " + out_dir.string() + ": " + ec.message());
    for (const auto& [path, content] : outputs) {
      written.push_back(path);
      internal::WriteTextFile(path, content);
    }
    written.push_back(out_dir / "coreset.txt");
    WriteCoresetIndices(coreset, out_dir / "coreset.txt");
  } catch (const Error& e) {
    for (const auto& path : written) {
      std::error_code ignored;
      std::filesystem::remove(path, ignored);
    }
    throw e.WithContext("stage 'write'");
  }

  return PipelineResult{std::move(features), std::move(partition),
                        std::move(coreset), std::move(report)};
}

Diagnostics ValidateInputs(const std::filesystem::path& manifest_path) {
  std::ostringstream out;
  Diagnostics diag;
  std::vector<ManifestEntry> entries;
  try {
    entries = ReadManifest(manifest_path);
  } catch (const Error& e) {
    diag.exit_code = 2;
    diag.text = std::string(e.what()) + "\n";
    return diag;
  }

  std::vector<EmbeddingTensor> tensors;
  bool failed = false;
  for (const ManifestEntry& entry : entries) {
    try {
      EmbeddingTensor t = ReadEmbeddingTensor(entry.path).Renamed(entry.name);
      out << "modality " << t.modality_name() << ": n=" << t.n()
          << " t=" << t.t() << " d=" << t.d() << " finite=yes\n";
      tensors.push_back(std::move(t));
    } catch (const Error& e) {
      out << "modality " << entry.name << ": " << e.what() << "\n";
      failed = true;
    }
  }
  if (!failed) {
    try {
      const MultimodalDataset dataset(std::move(tensors));
      out << "OK, n=" << dataset.n() << ", M=" << dataset.modality_count() << "\n";
    } catch (const Error& e) {
      out << e.what() << "\n";
      failed = true;
    }
  }
  diag.exit_code = failed ? 2 : 0;
  diag.text = out.str();
  return diag;
}

}  // namespace mmcoreset
