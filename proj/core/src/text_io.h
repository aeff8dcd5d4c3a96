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
#ifndef MMCORESET_SRC_TEXT_IO_H_
#define MMCORESET_SRC_TEXT_IO_H_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mmcoreset/errors.h"

namespace mmcoreset::internal {

inline void WriteTextFile(const std::filesystem::path& path,
                          const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out << content;
  if (!out) Fail(ErrorCode::kIo, "write failed for " + path.string());
}

inline nlohmann::json ReadJsonFile(const std::filesystem::path& path,
                                   ErrorCode parse_error) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    Fail(parse_error, path.string() + " is not valid JSON: " + e.what());
  }
}

}  // namespace mmcoreset::internal

#endif  // MMCORESET_SRC_TEXT_IO_H_
