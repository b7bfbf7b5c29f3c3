// Copyright 2026 The schoolchoice Authors
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

// Shared plumbing for the command-line tool: exit codes, file access and
// JSON renderings of results.

#ifndef SCHOOLCHOICE_TOOLS_IO_H_
#define SCHOOLCHOICE_TOOLS_IO_H_

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "schoolchoice/model.h"
#include "schoolchoice/prob.h"

namespace schoolchoice::cli {

enum ExitCode {
  kOk = 0,
  kGoldenFailure = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
};

// Bad flags or unreadable files; maps to kInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path);
// Writes to `path`, or to stdout when path is empty or "-".
void WriteOutput(const std::string& path, const std::string& text);

Instance LoadInstance(const std::string& path);
// `spec` is either a path to a matching document or the JSON text itself.
Matching LoadMatching(const Instance& inst, const std::string& spec);

nlohmann::ordered_json ProbabilityJson(const Probability& p);

}  // namespace schoolchoice::cli

#endif  // SCHOOLCHOICE_TOOLS_IO_H_
