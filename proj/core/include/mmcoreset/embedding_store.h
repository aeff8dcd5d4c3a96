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

// MMEB: little-endian binary container for one modality's token embeddings.
//
//   offset  size  field
//   0       4     magic "MMEB"
//   4       4     version (u32) = 1
//   8       4     dtype (u32): 1 = f32, 2 = f64
//   12      8     n, samples (u64)
//   20      8     t, tokens per sample (u64)
//   28      8     d, embedding width (u64)
//   36      4     name_len (u32)
//   40      name_len   UTF-8 modality name
//   ...     n*t*d values, sample-major then token then dim
//
// A dataset manifest is JSON: {"modalities": [{"name": ..., "path": ...}]}.
// Relative paths resolve against the manifest's directory.

#ifndef MMCORESET_EMBEDDING_STORE_H_
#define MMCORESET_EMBEDDING_STORE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mmcoreset {

enum class StorageType : std::uint32_t {
  kF32 = 1,
  kF64 = 2,
};

inline constexpr std::size_t kMmebHeaderBytes = 40;

// One modality: n samples x t tokens x d dims, stored row-major in doubles.
// The constructor enforces the size and finiteness invariants.
class EmbeddingTensor {
 public:
  EmbeddingTensor(std::string modality_name, std::size_t n, std::size_t t,
                  std::size_t d, std::vector<double> values);

  const std::string& modality_name() const { return modality_name_; }
  std::size_t n() const { return n_; }
  std::size_t t() const { return t_; }
  std::size_t d() const { return d_; }
  std::span<const double> values() const { return values_; }

  // The t*d values of one sample.
  std::span<const double> sample(std::size_t i) const {
    return std::span<const double>(values_).subspan(i * t_ * d_, t_ * d_);
  }

  EmbeddingTensor Renamed(std::string name) && {
    EmbeddingTensor out = std::move(*this);
    out.modality_name_ = std::move(name);
    return out;
  }

  friend bool operator==(const EmbeddingTensor&,
                         const EmbeddingTensor&) = default;

 private:
  std::string modality_name_;
  std::size_t n_;
  std::size_t t_;
  std::size_t d_;
  std::vector<double> values_;
};

// Aligned modalities sharing one sample count; names are pairwise distinct.
class MultimodalDataset {
 public:
  explicit MultimodalDataset(std::vector<EmbeddingTensor> modalities);

  std::size_t n() const { return modalities_.front().n(); }
  std::size_t modality_count() const { return modalities_.size(); }
  const std::vector<EmbeddingTensor>& modalities() const {
    return modalities_;
  }

 private:
  std::vector<EmbeddingTensor> modalities_;
};

EmbeddingTensor ReadEmbeddingTensor(const std::filesystem::path& path);

// Values stored as f32 are rounded to nearest-even.
void WriteEmbeddingTensor(const EmbeddingTensor& tensor,
                          const std::filesystem::path& path,
                          StorageType dtype);

// Encodes/decodes the full file image; the file functions wrap these.
std::vector<std::uint8_t> EncodeEmbeddingTensor(const EmbeddingTensor& tensor,
                                                StorageType dtype);
EmbeddingTensor DecodeEmbeddingTensor(std::span<const std::uint8_t> bytes);

struct ManifestEntry {
  std::string name;
  std::filesystem::path path;
};

// Parses the manifest; paths come back resolved against its directory.
std::vector<ManifestEntry> ReadManifest(
    const std::filesystem::path& manifest_path);

void WriteManifest(const std::vector<ManifestEntry>& entries,
                   const std::filesystem::path& manifest_path);

// Loads every listed modality (files are read concurrently) in manifest
// order.
MultimodalDataset LoadDataset(const std::filesystem::path& manifest_path);

}  // namespace mmcoreset

#endif  // MMCORESET_EMBEDDING_STORE_H_
