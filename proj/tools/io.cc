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

#include "io.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "schoolchoice/json_io.h"

namespace schoolchoice::cli {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Instance LoadInstance(const std::string& path) { return ParseInstance(ReadFile(path)); }

Matching LoadMatching(const Instance& inst, const std::string& spec) {
  auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') return ParseMatching(inst, spec);
  return ParseMatching(inst, ReadFile(spec));
}

nlohmann::ordered_json ProbabilityJson(const Probability& p) {
  nlohmann::ordered_json j;
  j["value"] = p.value.ToString();
  j["kind"] = KindName(p.kind);
  if (p.kind == ProbabilityKind::kEstimate) {
    j["std_error"] = p.std_error;
    j["samples"] = p.samples;
    j["seed"] = p.seed;
  }
  return j;
}

}  // namespace schoolchoice::cli
