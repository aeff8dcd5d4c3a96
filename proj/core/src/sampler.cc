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
#include "mmcoreset/sampler.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "mmcoreset/errors.h"
#include "text_io.h"

namespace mmcoreset {

std::size_t CoresetSize(double fraction, std::size_t n) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    Fail(ErrorCode::kConfig, "fraction must be in (0, 1]");
  }
  return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + 0.5));
}

std::vector<std::size_t> Quotas(std::span<const std::size_t> bin_sizes,
                                double fraction) {
  std::size_t total_size = 0;
  for (std::size_t s : bin_sizes) {
    if (s == 0) Fail(ErrorCode::kConfig, "bin sizes must be >= 1");
    total_size += s;
  }
  const std::size_t total = CoresetSize(fraction, total_size);
  if (total > total_size) {
    Fail(ErrorCode::kInternal, "coreset larger than the dataset");
  }

  // share_k = total * size_k / total_size, kept as an exact integer
  // quotient and remainder.
  std::vector<std::size_t> quotas(bin_sizes.size());
  std::vector<std::size_t> remainders(bin_sizes.size());
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < bin_sizes.size(); ++k) {
    const unsigned __int128 scaled =
        static_cast<unsigned __int128>(total) * bin_sizes[k];
    quotas[k] = static_cast<std::size_t>(scaled / total_size);
    remainders[k] = static_cast<std::size_t>(scaled % total_size);
    assigned += quotas[k];
  }
  std::vector<std::size_t> order(bin_sizes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainders[a] > remainders[b];
  });
  for (std::size_t i = 0; assigned < total; ++i, ++assigned) ++quotas[order[i]];
  for (std::size_t k = 0; k < bin_sizes.size(); ++k) {
    if (quotas[k] > bin_sizes[k]) {
      Fail(ErrorCode::kInternal, "quota exceeds bin size");
    }
  }
  return quotas;
}

Coreset SampleCoreset(const BinPartition& partition, double fraction,
                      std::uint64_t seed) {
  ValidatePartition(partition);
  std::vector<std::size_t> sizes;
  sizes.reserve(partition.bins.size());
  for (const auto& bin : partition.bins) sizes.push_back(bin.size());
  const std::vector<std::size_t> quotas = Quotas(sizes, fraction);

  Coreset coreset;
  coreset.n_total = partition.n_total;
  coreset.fraction = fraction;
  coreset.seed = seed;
  SplitMix64 rng(seed);
  for (std::size_t k = 0; k < partition.bins.size(); ++k) {
    std::vector<std::size_t> members = partition.bins[k];
    std::sort(members.begin(), members.end());
    const std::size_t m = members.size();
    for (std::size_t i = 0; i < quotas[k]; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.Next() % (m - i));
      std::swap(members[i], members[j]);
    }
    coreset.indices.insert(coreset.indices.end(), members.begin(),
                           members.begin() + static_cast<std::ptrdiff_t>(quotas[k]));
  }
  std::sort(coreset.indices.begin(), coreset.indices.end());
  return coreset;
}

std::string CoresetToJson(const Coreset& coreset) {
  nlohmann::json doc = {
      {"n", coreset.n_total},
      {"fraction", coreset.fraction},
      {"seed", coreset.seed},
      {"indices", coreset.indices},
  };
  if (!coreset.config_fingerprint.empty()) {
    doc["config_fingerprint"] = coreset.config_fingerprint;
  }
  return doc.dump() + "\n";
}

void WriteCoreset(const Coreset& coreset, const std::filesystem::path& path) {
  internal::WriteTextFile(path, CoresetToJson(coreset));
}

Coreset ReadCoreset(const std::filesystem::path& path) {
  const nlohmann::json doc = internal::ReadJsonFile(path, ErrorCode::kFormat);
  Coreset coreset;
  try {
    coreset.n_total = doc.at("n").get<std::size_t>();
    coreset.fraction = doc.at("fraction").get<double>();
    coreset.seed = doc.at("seed").get<std::uint64_t>();
    coreset.indices = doc.at("indices").get<std::vector<std::size_t>>();
    if (doc.contains("config_fingerprint")) {
      coreset.config_fingerprint = doc["config_fingerprint"].get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kFormat, path.string() + ": " + e.what());
  }
  for (std::size_t i = 0; i < coreset.indices.size(); ++i) {
    if (coreset.indices[i] >= coreset.n_total ||
        (i > 0 && coreset.indices[i] <= coreset.indices[i - 1])) {
      Fail(ErrorCode::kFormat, path.string() +
                                   ": indices must be strictly increasing and < n");
    }
  }
  return coreset;
}

void WriteCoresetIndices(const Coreset& coreset,
                         const std::filesystem::path& path) {
  std::ostringstream out;
  for (std::size_t i : coreset.indices) out << i << "\n";
  internal::WriteTextFile(path, out.str());
}

}  // namespace mmcoreset
