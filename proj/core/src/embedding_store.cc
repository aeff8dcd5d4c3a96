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
#include "mmcoreset/embedding_store.h"

#include <bit>
#include <cmath>
#include <fstream>
#include <future>
#include <iterator>
#include <limits>
#include <set>
#include <utility>

#include "json.hpp"
#include "mmcoreset/errors.h"

namespace mmcoreset {
namespace {

constexpr std::uint8_t kMagic[4] = {'M', 'M', 'E', 'B'};
constexpr std::uint32_t kVersion = 1;

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void PutU64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t GetU32(std::span<const std::uint8_t> in, std::size_t offset) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{in[offset + i]} << (8 * i);
  return v;
}

std::uint64_t GetU64(std::span<const std::uint8_t> in, std::size_t offset) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{in[offset + i]} << (8 * i);
  return v;
}

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) Fail(ErrorCode::kIo, "read failed for " + path.string());
  return bytes;
}

}  // namespace

EmbeddingTensor::EmbeddingTensor(std::string modality_name, std::size_t n,
                                 std::size_t t, std::size_t d,
                                 std::vector<double> values)
    : modality_name_(std::move(modality_name)),
      n_(n),
      t_(t),
      d_(d),
      values_(std::move(values)) {
  if (n_ == 0 || t_ == 0 || d_ == 0) {
    Fail(ErrorCode::kData, "tensor '" + modality_name_ +
                               "' has a zero dimension (n, t, d must be >= 1)");
  }
  if (values_.size() / n_ / t_ != d_ || values_.size() % (n_ * t_) != 0) {
    Fail(ErrorCode::kData, "tensor '" + modality_name_ + "' holds " +
                               std::to_string(values_.size()) +
                               " values, expected n*t*d");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      Fail(ErrorCode::kData, "tensor '" + modality_name_ +
                                 "' has a non-finite value at flat index " +
                                 std::to_string(i));
    }
  }
}

MultimodalDataset::MultimodalDataset(std::vector<EmbeddingTensor> modalities)
    : modalities_(std::move(modalities)) {
  if (modalities_.empty()) {
    Fail(ErrorCode::kManifest, "dataset needs at least one modality");
  }
  std::set<std::string> names;
  for (const EmbeddingTensor& m : modalities_) {
    if (!names.insert(m.modality_name()).second) {
      Fail(ErrorCode::kManifest,
           "duplicate modality name '" + m.modality_name() + "'");
    }
    if (m.n() != modalities_.front().n()) {
      Fail(ErrorCode::kAlignment,
           "modality '" + m.modality_name() + "' has n=" +
               std::to_string(m.n()) + " but '" +
               modalities_.front().modality_name() + "' has n=" +
               std::to_string(modalities_.front().n()));
    }
  }
}

std::vector<std::uint8_t> EncodeEmbeddingTensor(const EmbeddingTensor& tensor,
                                                StorageType dtype) {
  if (dtype != StorageType::kF32 && dtype != StorageType::kF64) {
    Fail(ErrorCode::kFormat, "unknown storage dtype");
  }
  const std::string& name = tensor.modality_name();
  if (name.size() > std::numeric_limits<std::uint32_t>::max()) {
    Fail(ErrorCode::kFormat, "modality name too long");
  }
  const std::size_t width = dtype == StorageType::kF32 ? 4 : 8;
  std::vector<std::uint8_t> out;
  out.reserve(kMmebHeaderBytes + name.size() + tensor.values().size() * width);
  for (std::uint8_t c : kMagic) out.push_back(c);
  PutU32(out, kVersion);
  PutU32(out, static_cast<std::uint32_t>(dtype));
  PutU64(out, tensor.n());
  PutU64(out, tensor.t());
  PutU64(out, tensor.d());
  PutU32(out, static_cast<std::uint32_t>(name.size()));
  for (char c : name) out.push_back(static_cast<std::uint8_t>(c));
  for (double v : tensor.values()) {
    if (dtype == StorageType::kF32) {
      PutU32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
    } else {
      PutU64(out, std::bit_cast<std::uint64_t>(v));
    }
  }
  return out;
}

EmbeddingTensor DecodeEmbeddingTensor(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) Fail(ErrorCode::kTruncation, "file shorter than magic");
  if (!std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    Fail(ErrorCode::kFormat, "bad magic, expected \"MMEB\"");
  }
  if (bytes.size() < kMmebHeaderBytes) {
    Fail(ErrorCode::kTruncation, "file shorter than the 40-byte header");
  }
  const std::uint32_t version = GetU32(bytes, 4);
  if (version != kVersion) {
    Fail(ErrorCode::kFormat, "unsupported version " + std::to_string(version));
  }
  const std::uint32_t dtype = GetU32(bytes, 8);
  if (dtype != 1 && dtype != 2) {
    Fail(ErrorCode::kFormat, "unknown dtype code " + std::to_string(dtype));
  }
  const std::uint64_t n = GetU64(bytes, 12);
  const std::uint64_t t = GetU64(bytes, 20);
  const std::uint64_t d = GetU64(bytes, 28);
  if (n == 0 || t == 0 || d == 0) {
    Fail(ErrorCode::kFormat, "header dimensions must be >= 1");
  }
  const std::uint64_t name_len = GetU32(bytes, 36);
  if (bytes.size() - kMmebHeaderBytes < name_len) {
    Fail(ErrorCode::kTruncation, "file ends inside the modality name");
  }
  const std::uint64_t width = dtype == 1 ? 4 : 8;
  const std::uint64_t payload = bytes.size() - kMmebHeaderBytes - name_len;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (n > kMax / t || n * t > kMax / d || n * t * d > kMax / width ||
      n * t * d * width != payload) {
    Fail(ErrorCode::kTruncation,
         "header dims " + std::to_string(n) + "x" + std::to_string(t) + "x" +
             std::to_string(d) + " do not match payload of " +
             std::to_string(payload) + " bytes");
  }
  std::string name(reinterpret_cast<const char*>(bytes.data()) + kMmebHeaderBytes,
                   name_len);
  const std::size_t count = n * t * d;
  const std::size_t base = kMmebHeaderBytes + name_len;
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (dtype == 1) {
      values[i] = std::bit_cast<float>(GetU32(bytes, base + 4 * i));
    } else {
      values[i] = std::bit_cast<double>(GetU64(bytes, base + 8 * i));
    }
  }
  return EmbeddingTensor(std::move(name), n, t, d, std::move(values));
}

EmbeddingTensor ReadEmbeddingTensor(const std::filesystem::path& path) {
  std::vector<std::uint8_t> bytes = ReadFileBytes(path);
  try {
    return DecodeEmbeddingTensor(bytes);
  } catch (const Error& e) {
    throw e.WithContext(path.string());
  }
}

void WriteEmbeddingTensor(const EmbeddingTensor& tensor,
                          const std::filesystem::path& path,
                          StorageType dtype) {
  const std::vector<std::uint8_t> bytes = EncodeEmbeddingTensor(tensor, dtype);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) Fail(ErrorCode::kIo, "write failed for " + path.string());
}

std::vector<ManifestEntry> ReadManifest(
    const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) Fail(ErrorCode::kIo, "cannot open manifest " + manifest_path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kManifest, "manifest is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("modalities") ||
      !doc["modalities"].is_array()) {
    Fail(ErrorCode::kManifest, "manifest needs a \"modalities\" array");
  }
  const std::filesystem::path base = manifest_path.parent_path();
  std::vector<ManifestEntry> entries;
  std::set<std::string> names;
  for (const nlohmann::json& item : doc["modalities"]) {
    if (!item.is_object() || !item.contains("name") || !item.contains("path") ||
        !item["name"].is_string() || !item["path"].is_string()) {
      Fail(ErrorCode::kManifest,
           "each modality needs string \"name\" and \"path\" fields");
    }
    ManifestEntry entry{item["name"].get<std::string>(),
                        item["path"].get<std::string>()};
    if (!names.insert(entry.name).second) {
      Fail(ErrorCode::kManifest, "duplicate modality name '" + entry.name + "'");
    }
    if (entry.path.is_relative()) entry.path = base / entry.path;
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) Fail(ErrorCode::kManifest, "manifest lists no modalities");
  return entries;
}

void WriteManifest(const std::vector<ManifestEntry>& entries,
                   const std::filesystem::path& manifest_path) {
  nlohmann::json doc;
  doc["modalities"] = nlohmann::json::array();
  for (const ManifestEntry& e : entries) {
    doc["modalities"].push_back({{"name", e.name}, {"path", e.path.string()}});
  }
  std::ofstream out(manifest_path, std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, "cannot open " + manifest_path.string());
  out << doc.dump(2) << "\n";
  if (!out) Fail(ErrorCode::kIo, "write failed for " + manifest_path.string());
}

MultimodalDataset LoadDataset(const std::filesystem::path& manifest_path) {
  const std::vector<ManifestEntry> entries = ReadManifest(manifest_path);
  std::vector<std::future<EmbeddingTensor>> pending;
  pending.reserve(entries.size());
  for (const ManifestEntry& entry : entries) {
    pending.push_back(std::async(std::launch::async, [&entry] {
      // The manifest name is authoritative over the name stored in the file.
      return ReadEmbeddingTensor(entry.path).Renamed(entry.name);
    }));
  }
  std::vector<EmbeddingTensor> tensors;
  tensors.reserve(entries.size());
  for (auto& f : pending) tensors.push_back(f.get());
  return MultimodalDataset(std::move(tensors));
}

}  // namespace mmcoreset
