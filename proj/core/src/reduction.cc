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
#include "mmcoreset/reduction.h"

#include <cmath>
#include <fstream>
#include <string>
#include <utility>

#include "json.hpp"
#include "mmcoreset/eigen_solver.h"
#include "mmcoreset/errors.h"
#include "mmcoreset/parallel.h"

namespace mmcoreset {
namespace {

constexpr double kRankTolerance = 1e-12;

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

void FixSign(std::span<double> v) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < v.size(); ++j) {
    if (std::abs(v[j]) > std::abs(v[best])) best = j;
  }
  if (v[best] < 0.0) {
    for (double& x : v) x = -x;
  }
}

// Centered copy of the data, row-major n x d.
std::vector<double> Center(const FeatureMatrix& features,
                           std::vector<double>& mean) {
  const std::size_t n = features.n();
  const std::size_t d = features.d();
  mean.assign(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = features.row(i);
    for (std::size_t j = 0; j < d; ++j) mean[j] += r[j];
  }
  for (double& m : mean) m /= static_cast<double>(n);
  std::vector<double> centered(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = features.row(i);
    for (std::size_t j = 0; j < d; ++j) centered[i * d + j] = r[j] - mean[j];
  }
  return centered;
}

}  // namespace

PcaModel FitPca(const FeatureMatrix& features, std::size_t k,
                const PcaOptions& options) {
  const std::size_t n = features.n();
  const std::size_t d = features.d();
  if (n < 2) Fail(ErrorCode::kRank, "PCA needs at least 2 samples");
  if (k < 1 || k > std::min(n - 1, d)) {
    Fail(ErrorCode::kRank, "k=" + std::to_string(k) + " outside [1, " +
                               std::to_string(std::min(n - 1, d)) +
                               "] for n=" + std::to_string(n) +
                               ", d=" + std::to_string(d));
  }

  PcaModel model;
  model.k = k;
  model.d = d;
  const std::vector<double> x = Center(features, model.mean);
  const double denom = static_cast<double>(n - 1);
  const std::size_t threads = ResolveThreads(options.threads);

  double total_variance = 0.0;
  for (double v : x) total_variance += v * v;
  if (total_variance == 0.0) {
    Fail(ErrorCode::kDegenerate, "all rows are identical; no principal direction");
  }

  PcaRoute route = options.route;
  if (route == PcaRoute::kAuto) {
    route = d <= n ? PcaRoute::kCovariance : PcaRoute::kGram;
  }

  model.components.resize(k * d);
  model.explained_variance.resize(k);

  if (route == PcaRoute::kCovariance) {
    std::vector<double> cov(d * d);
    // Each entry is summed over samples in index order by one thread.
    ParallelFor(d, threads, 16, [&](std::size_t begin, std::size_t end) {
      for (std::size_t a = begin; a < end; ++a) {
        for (std::size_t b = a; b < d; ++b) {
          double s = 0.0;
          for (std::size_t i = 0; i < n; ++i) s += x[i * d + a] * x[i * d + b];
          cov[a * d + b] = s / denom;
        }
      }
    });
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < a; ++b) cov[a * d + b] = cov[b * d + a];
    }
    SymmetricEigenResult eig = SymmetricEigen(std::move(cov), d);
    for (std::size_t c = 0; c < k; ++c) {
      model.explained_variance[c] = std::max(0.0, eig.eigenvalues[c]);
      std::copy_n(eig.eigenvectors.begin() + c * d, d,
                  model.components.begin() + c * d);
    }
  } else {
    std::vector<double> gram(n * n);
    ParallelFor(n, threads, 4, [&](std::size_t begin, std::size_t end) {
      for (std::size_t a = begin; a < end; ++a) {
        std::span<const double> ra(x.data() + a * d, d);
        for (std::size_t b = a; b < n; ++b) {
          gram[a * n + b] = Dot(ra, std::span<const double>(x.data() + b * d, d)) / denom;
        }
      }
    });
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < a; ++b) gram[a * n + b] = gram[b * n + a];
    }
    SymmetricEigenResult eig = SymmetricEigen(std::move(gram), n);
    const double largest = eig.eigenvalues.front();
    for (std::size_t c = 0; c < k; ++c) {
      const double lambda = eig.eigenvalues[c];
      if (!(lambda > kRankTolerance * largest)) {
        Fail(ErrorCode::kDegenerate,
             "k=" + std::to_string(k) + " exceeds the numerical rank of the data");
      }
      // v = X^T u / sqrt((n-1) * lambda) has unit norm.
      std::span<const double> u(eig.eigenvectors.data() + c * n, n);
      std::span<double> v(model.components.data() + c * d, d);
      const double scale = 1.0 / std::sqrt(denom * lambda);
      ParallelFor(d, threads, 4096, [&](std::size_t begin, std::size_t end) {
        for (std::size_t j = begin; j < end; ++j) {
          double s = 0.0;
          for (std::size_t i = 0; i < n; ++i) s += x[i * d + j] * u[i];
          v[j] = s * scale;
        }
      });
      model.explained_variance[c] = lambda;
    }
  }

  for (std::size_t c = 0; c < k; ++c) {
    FixSign(std::span<double>(model.components.data() + c * d, d));
  }
  return model;
}

FeatureMatrix PcaTransform(const PcaModel& model, const FeatureMatrix& features) {
  if (features.d() != model.d) {
    Fail(ErrorCode::kDimension, "features have width " +
                                    std::to_string(features.d()) +
                                    " but the PCA model expects " +
                                    std::to_string(model.d));
  }
  const std::size_t n = features.n();
  const std::size_t d = model.d;
  std::vector<double> out(n * model.k);
  ParallelFor(n, ResolveThreads(0), 8, [&](std::size_t begin, std::size_t end) {
    std::vector<double> centered(d);
    for (std::size_t i = begin; i < end; ++i) {
      auto r = features.row(i);
      for (std::size_t j = 0; j < d; ++j) centered[j] = r[j] - model.mean[j];
      for (std::size_t c = 0; c < model.k; ++c) {
        out[i * model.k + c] = Dot(model.component(c), centered);
      }
    }
  });
  return FeatureMatrix(n, model.k, std::move(out),
                       features.provenance() + "+pca" + std::to_string(model.k));
}

void WritePcaModel(const PcaModel& model, const std::filesystem::path& path) {
  const std::string stem = path.stem().string();
  const std::filesystem::path mean_path =
      path.parent_path() / (stem + ".mean.mmeb");
  const std::filesystem::path comp_path =
      path.parent_path() / (stem + ".components.mmeb");
  WriteEmbeddingTensor(EmbeddingTensor("mean", 1, 1, model.d, model.mean),
                       mean_path, StorageType::kF64);
  WriteEmbeddingTensor(
      EmbeddingTensor("components", model.k, 1, model.d, model.components),
      comp_path, StorageType::kF64);
  nlohmann::json doc = {
      {"k", model.k},
      {"d", model.d},
      {"explained_variance", model.explained_variance},
      {"mean", mean_path.filename().string()},
      {"components", comp_path.filename().string()},
  };
  std::ofstream out(path, std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, "cannot open " + path.string());
  out << doc.dump(2) << "\n";
  if (!out) Fail(ErrorCode::kIo, "write failed for " + path.string());
}

PcaModel ReadPcaModel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path.string());
  PcaModel model;
  std::string mean_file;
  std::string comp_file;
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);
    model.k = doc.at("k").get<std::size_t>();
    model.d = doc.at("d").get<std::size_t>();
    model.explained_variance = doc.at("explained_variance").get<std::vector<double>>();
    mean_file = doc.at("mean").get<std::string>();
    comp_file = doc.at("components").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kFormat, "bad PCA model header " + path.string() + ": " + e.what());
  }
  const EmbeddingTensor mean = ReadEmbeddingTensor(path.parent_path() / mean_file);
  const EmbeddingTensor comp = ReadEmbeddingTensor(path.parent_path() / comp_file);
  if (mean.n() * mean.t() != 1 || mean.d() != model.d || comp.n() != model.k ||
      comp.t() * comp.d() != model.d || model.explained_variance.size() != model.k) {
    Fail(ErrorCode::kFormat, "PCA model files disagree with header k/d");
  }
  model.mean.assign(mean.values().begin(), mean.values().end());
  model.components.assign(comp.values().begin(), comp.values().end());
  return model;
}

}  // namespace mmcoreset
