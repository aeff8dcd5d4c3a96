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

#ifndef MMCORESET_ERRORS_H_
#define MMCORESET_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mmcoreset {

enum class ErrorCode {
  kFormat,
  kTruncation,
  kData,
  kIo,
  kAlignment,
  kManifest,
  kDimension,
  kRank,
  kDegenerate,
  kIndex,
  kConfig,
  kPartition,
  kEmpty,
  kReport,
  kInternal,
};

// Name used in diagnostics, e.g. "AlignmentError".
std::string_view ErrorName(ErrorCode code);

// All library failures are reported through this exception type. The
// message never includes the error name; what() does.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message);

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }

  // Same code, message prefixed with "<context>: ".
  Error WithContext(std::string_view context) const;

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] void Fail(ErrorCode code, std::string message);

}  // namespace mmcoreset

#endif  // MMCORESET_ERRORS_H_
