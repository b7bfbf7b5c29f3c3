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

// Registry of reference values for the fixed instances and families, checked
// by `schoolchoice paper-check`.

#ifndef SCHOOLCHOICE_TOOLS_GOLDENS_H_
#define SCHOOLCHOICE_TOOLS_GOLDENS_H_

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace schoolchoice::cli {

struct Golden {
  std::string name;
  std::string expected;
  std::function<std::string()> compute;
};

std::vector<Golden> AllGoldens();

struct GoldenResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// Values equal as rationals when both parse, as strings otherwise.
bool GoldenMatches(const std::string& expected, const std::string& actual);

// Runs every golden, with `overrides` replacing expectations by name.
// Throws std::invalid_argument for an override naming no golden.
std::vector<GoldenResult> RunGoldens(const std::map<std::string, std::string>& overrides);

}  // namespace schoolchoice::cli

#endif  // SCHOOLCHOICE_TOOLS_GOLDENS_H_
