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

#include "schoolchoice/json_io.h"

#include <map>
#include <string>

namespace schoolchoice {
namespace {

using nlohmann::json;

[[noreturn]] void Malformed(const std::string& what) {
  throw ModelError(ErrorKind::kMalformedDocument, what);
}

const json& Field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) Malformed(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) Malformed(where + ": missing \"" + key + "\"");
  return *it;
}

std::vector<std::string> IdList(const json& doc, const char* key) {
  const json& list = Field(doc, key, "instance");
  if (!list.is_array()) Malformed(std::string("\"") + key + "\" must be an array");
  std::vector<std::string> ids;
  for (const auto& item : list) {
    if (!item.is_string()) {
      Malformed(std::string("\"") + key + "\" entries must be strings");
    }
    ids.push_back(item.get<std::string>());
  }
  return ids;
}

Rational RationalValue(const json& value, const std::string& where) {
  try {
    if (value.is_string()) return ParseRational(value.get<std::string>());
    if (value.is_number_integer()) {
      return Rational(mpz_class(value.dump(), 10));
    }
    if (value.is_number_float()) {
      return RationalFromDecimalDouble(value.get<double>());
    }
  } catch (const std::invalid_argument& e) {
    Malformed(where + ": " + e.what());
  }
  Malformed(where + ": expected a rational");
}

double RealValue(const json& value, const std::string& where) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    try {
      return ToDouble(ParseRational(value.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      Malformed(where + ": " + e.what());
    }
  }
  Malformed(where + ": expected a number");
}

WeightDistribution ParseDistribution(const json& doc, const std::string& where) {
  const json& type = Field(doc, "type", where);
  if (!type.is_string()) Malformed(where + ": \"type\" must be a string");
  const std::string kind = type.get<std::string>();
  if (kind == "uniform_simplex") return UniformSimplex{};
  if (kind == "beta2") {
    return BetaTwoFeature{RealValue(Field(doc, "alpha", where), where + ".alpha"),
                          RealValue(Field(doc, "beta", where), where + ".beta")};
  }
  if (kind == "discrete") {
    const json& support = Field(doc, "support", where);
    if (!support.is_array()) Malformed(where + ": \"support\" must be an array");
    DiscreteWeights dist;
    for (const auto& point : support) {
      const json& w = Field(point, "w", where + ".support");
      if (!w.is_array()) Malformed(where + ": \"w\" must be an array");
      WeightPoint wp;
      for (const auto& x : w) wp.weights.push_back(RationalValue(x, where + ".w"));
      wp.probability = RationalValue(Field(point, "p", where + ".support"),
                                     where + ".p");
      dist.support.push_back(std::move(wp));
    }
    return dist;
  }
  Malformed(where + ": unknown distribution type \"" + kind + "\"");
}

nlohmann::ordered_json DistributionToJson(const WeightDistribution& dist) {
  nlohmann::ordered_json out;
  if (std::holds_alternative<UniformSimplex>(dist)) {
    out["type"] = "uniform_simplex";
  } else if (const auto* beta = std::get_if<BetaTwoFeature>(&dist)) {
    out["type"] = "beta2";
    out["alpha"] = beta->alpha;
    out["beta"] = beta->beta;
  } else {
    const auto& discrete = std::get<DiscreteWeights>(dist);
    out["type"] = "discrete";
    auto support = nlohmann::ordered_json::array();
    for (const auto& point : discrete.support) {
      nlohmann::ordered_json p;
      auto w = nlohmann::ordered_json::array();
      for (const auto& x : point.weights) w.push_back(ToString(x));
      p["w"] = std::move(w);
      p["p"] = ToString(point.probability);
      support.push_back(std::move(p));
    }
    out["support"] = std::move(support);
  }
  return out;
}

std::map<std::string, int> IndexOf(const std::vector<std::string>& ids) {
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) index[ids[i]] = i;
  return index;
}

}  // namespace

Instance InstanceFromJson(const json& doc) {
  if (!doc.is_object()) Malformed("instance document must be a JSON object");
  Instance::Data data;
  data.students = IdList(doc, "students");
  data.colleges = IdList(doc, "colleges");
  data.features = IdList(doc, "features");
  const auto student_index = IndexOf(data.students);

  const json& capacities = Field(doc, "capacities", "instance");
  for (const auto& c : data.colleges) {
    const json& x = Field(capacities, c.c_str(), "capacities");
    if (!x.is_number_integer()) Malformed("capacity of " + c + " must be an integer");
    data.capacities.push_back(x.get<int>());
  }

  const json& prefs = Field(doc, "college_prefs", "instance");
  if (!prefs.is_object()) Malformed("\"college_prefs\" must be an object");
  for (const auto& c : data.colleges) {
    auto it = prefs.find(c);
    if (it == prefs.end()) {
      throw ModelError(ErrorKind::kIncompletePreference,
                       "college " + c + ": missing preference list");
    }
    if (!it->is_array()) Malformed("preference of " + c + " must be an array");
    std::vector<int> order;
    for (const auto& s : *it) {
      if (!s.is_string()) Malformed("preference of " + c + " must list ids");
      auto found = student_index.find(s.get<std::string>());
      if (found == student_index.end()) {
        throw ModelError(ErrorKind::kUnknownId,
                         "college " + c + " ranks unknown student \"" +
                             s.get<std::string>() + "\"");
      }
      order.push_back(found->second);
    }
    data.college_prefs.push_back(std::move(order));
  }

  const json& utilities = Field(doc, "utilities", "instance");
  for (const auto& s : data.students) {
    const json& per_student = Field(utilities, s.c_str(), "utilities");
    std::vector<std::vector<Rational>> table;
    for (const auto& f : data.features) {
      const json& per_feature = Field(per_student, f.c_str(), "utilities." + s);
      std::vector<Rational> row;
      for (const auto& c : data.colleges) {
        const std::string where = "utilities." + s + "." + f + "." + c;
        row.push_back(RationalValue(Field(per_feature, c.c_str(), where), where));
      }
      table.push_back(std::move(row));
    }
    data.utilities.push_back(std::move(table));
  }

  const json& dists = Field(doc, "weight_dists", "instance");
  for (const auto& s : data.students) {
    data.weight_dists.push_back(ParseDistribution(
        Field(dists, s.c_str(), "weight_dists"), "weight_dists." + s));
  }
  return Instance::Create(std::move(data));
}

Instance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Malformed(std::string("invalid JSON: ") + e.what());
  }
  return InstanceFromJson(doc);
}

nlohmann::ordered_json InstanceToJson(const Instance& inst) {
  nlohmann::ordered_json out;
  const auto& d = inst.data();
  out["students"] = d.students;
  out["colleges"] = d.colleges;
  nlohmann::ordered_json capacities = nlohmann::ordered_json::object();
  for (int c = 0; c < inst.num_colleges(); ++c) capacities[d.colleges[c]] = d.capacities[c];
  out["capacities"] = std::move(capacities);
  nlohmann::ordered_json prefs = nlohmann::ordered_json::object();
  for (int c = 0; c < inst.num_colleges(); ++c) {
    auto list = nlohmann::ordered_json::array();
    for (int s : d.college_prefs[c]) list.push_back(d.students[s]);
    prefs[d.colleges[c]] = std::move(list);
  }
  out["college_prefs"] = std::move(prefs);
  out["features"] = d.features;
  nlohmann::ordered_json utilities = nlohmann::ordered_json::object();
  for (int s = 0; s < inst.num_students(); ++s) {
    nlohmann::ordered_json per_student = nlohmann::ordered_json::object();
    for (int f = 0; f < inst.num_features(); ++f) {
      nlohmann::ordered_json row = nlohmann::ordered_json::object();
      for (int c = 0; c < inst.num_colleges(); ++c) {
        row[d.colleges[c]] = ToString(inst.utility(s, f, c));
      }
      per_student[d.features[f]] = std::move(row);
    }
    utilities[d.students[s]] = std::move(per_student);
  }
  out["utilities"] = std::move(utilities);
  nlohmann::ordered_json dists = nlohmann::ordered_json::object();
  for (int s = 0; s < inst.num_students(); ++s) {
    dists[d.students[s]] = DistributionToJson(inst.weights(s));
  }
  out["weight_dists"] = std::move(dists);
  return out;
}

std::string SerializeInstance(const Instance& inst) {
  return InstanceToJson(inst).dump(2) + "\n";
}

Matching MatchingFromJson(const Instance& inst, const json& doc) {
  if (!doc.is_object()) Malformed("matching document must be a JSON object");
  std::vector<int> assignment(inst.num_students(), kUnmatched);
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    auto c = inst.FindCollege(it.key());
    if (!c) {
      throw ModelError(ErrorKind::kUnknownId,
                       "matching names unknown college \"" + it.key() + "\"");
    }
    const json& held = it.value();
    if (!held.is_array()) Malformed("students of " + it.key() + " must be an array");
    for (const auto& id : held) {
      if (!id.is_string()) Malformed("matching entries must be student ids");
      auto s = inst.FindStudent(id.get<std::string>());
      if (!s) {
        throw ModelError(ErrorKind::kUnknownId,
                         "matching names unknown student \"" +
                             id.get<std::string>() + "\"");
      }
      if (assignment[*s] != kUnmatched) {
        Malformed("student " + id.get<std::string>() +
                  " is assigned more than once");
      }
      assignment[*s] = *c;
    }
  }
  return Matching(std::move(assignment), inst.num_colleges());
}

Matching ParseMatching(const Instance& inst, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Malformed(std::string("invalid JSON: ") + e.what());
  }
  return MatchingFromJson(inst, doc);
}

nlohmann::ordered_json MatchingToJson(const Instance& inst, const Matching& m) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (int c = 0; c < inst.num_colleges(); ++c) {
    auto list = nlohmann::ordered_json::array();
    for (int s : m.students_of(c)) list.push_back(inst.student_id(s));
    out[inst.college_id(c)] = std::move(list);
  }
  return out;
}

}  // namespace schoolchoice
