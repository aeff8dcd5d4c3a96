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

#include "mmcoreset/errors.h"

#include <utility>

namespace mmcoreset {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFormat:
      return "FormatError";
    case ErrorCode::kTruncation:
      return "TruncationError";
    case ErrorCode::kData:
      return "DataError";
    case ErrorCode::kIo:
      return "IoError";
    case ErrorCode::kAlignment:
      return "AlignmentError";
    case ErrorCode::kManifest:
      return "ManifestError";
    case ErrorCode::kDimension:
      return "DimensionError";
    case ErrorCode::kRank:
      return "RankError";
    case ErrorCode::kDegenerate:
      return "DegenerateError";
    case ErrorCode::kIndex:
      return "IndexError";
    case ErrorCode::kConfig:
      return "ConfigError";
    case ErrorCode::kPartition:
      return "PartitionError";
    case ErrorCode::kEmpty:
      return "EmptyError";
    case ErrorCode::kReport:
      return "ReportError";
    case ErrorCode::kInternal:
      return "InternalError";
  }
  return "Error";
}

Error::Error(ErrorCode code, std::string message)
    : std::runtime_error(std::string(ErrorName(code)) + ": " + message),
      code_(code),
      message_(std::move(message)) {}

Error Error::WithContext(std::string_view context) const {
  return Error(code_, std::string(context) + ": " + message_);
}

void Fail(ErrorCode code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace mmcoreset
