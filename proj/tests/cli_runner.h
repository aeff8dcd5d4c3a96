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
#ifndef MMCORESET_TESTS_CLI_RUNNER_H_
#define MMCORESET_TESTS_CLI_RUNNER_H_

#include <sys/wait.h>

#include <cstdlib>
#include <string>

namespace mmcoreset::testing {

// Runs the CLI binary with the given argument string; returns its exit code.
inline int RunCli(const std::string& args, const std::string& log_path = "/dev/null") {
  const std::string command =
      std::string(MMCORESET_CLI_PATH) + " " + args + " >" + log_path + " 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

inline std::string Quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace mmcoreset::testing

#endif  // MMCORESET_TESTS_CLI_RUNNER_H_
