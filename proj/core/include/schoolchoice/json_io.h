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

// JSON documents for instances and matchings.
//
// Instance:
//   {"students": ["s1", ...], "colleges": ["c1", ...],
//    "capacities": {"c1": 1, ...},
//    "college_prefs": {"c1": ["s2", "s1", ...], ...},
//    "features": ["f1", "f2"],
//    "utilities": {"s1": {"f1": {"c1": "3/10", ...}, ...}, ...},
//    "weight_dists": {"s1": {"type": "uniform_simplex"}
//                   | {"type": "discrete",
//                      "support": [{"w": ["1/2", "1/2"], "p": "1"}]}
//                   | {"type": "beta2", "alpha": 2.0, "beta": 2.0}}}
//
// Rationals may be "p/q" strings, decimal strings or JSON numbers; decimals
// are read exactly (0.3 is 3/10). Serialization always writes "p/q" strings.
//
// Matching: {"c1": ["s2"], "c2": ["s3"], ...}; students not listed are
// unmatched.

#ifndef SCHOOLCHOICE_JSON_IO_H_
#define SCHOOLCHOICE_JSON_IO_H_

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "schoolchoice/model.h"

namespace schoolchoice {

// Throws ModelError; kMalformedDocument for syntax or shape problems, the
// specific kind for invariant violations.
Instance ParseInstance(std::string_view text);
Instance InstanceFromJson(const nlohmann::json& doc);

nlohmann::ordered_json InstanceToJson(const Instance& inst);
std::string SerializeInstance(const Instance& inst);

// Throws ModelError(kUnknownId) for ids not in `inst`.
Matching ParseMatching(const Instance& inst, std::string_view text);
Matching MatchingFromJson(const Instance& inst, const nlohmann::json& doc);
nlohmann::ordered_json MatchingToJson(const Instance& inst, const Matching& m);

}  // namespace schoolchoice

#endif  // SCHOOLCHOICE_JSON_IO_H_
