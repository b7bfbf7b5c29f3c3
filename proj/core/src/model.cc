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

#include "schoolchoice/model.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace schoolchoice {
namespace {

void CheckUniqueIds(const std::vector<std::string>& ids, const char* what) {
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (id.empty()) {
      throw ModelError(ErrorKind::kMalformedDocument,
                       std::string("empty ") + what + " id");
    }
    if (!seen.insert(id).second) {
      throw ModelError(ErrorKind::kDuplicateId,
                       std::string("duplicate ") + what + " id \"" + id + "\"");
    }
  }
}

void CheckWeightDistribution(const WeightDistribution& dist,
                             int num_features, const std::string& student) {
  if (const auto* discrete = std::get_if<DiscreteWeights>(&dist)) {
    if (discrete->support.empty()) {
      throw ModelError(ErrorKind::kProbabilitySum,
                       "student " + student + ": empty discrete support");
    }
    Rational total = 0;
    for (const auto& point : discrete->support) {
      if (static_cast<int>(point.weights.size()) != num_features) {
        throw ModelError(ErrorKind::kDimensionMismatch,
                         "student " + student + ": weight vector has " +
                             std::to_string(point.weights.size()) +
                             " entries, expected " +
                             std::to_string(num_features));
      }
      Rational sum = 0;
      for (const auto& w : point.weights) {
        if (w < 0) {
          throw ModelError(ErrorKind::kInvalidWeightVector,
                           "student " + student +
                               ": weights must be non-negative");
        }
        sum += w;
      }
      if (sum != 1) {
        throw ModelError(ErrorKind::kInvalidWeightVector,
                         "student " + student + ": weights must sum to 1");
      }
      if (point.probability <= 0) {
        throw ModelError(ErrorKind::kProbabilitySum,
                         "student " + student +
                             ": probabilities must be positive");
      }
      total += point.probability;
    }
    if (total != 1) {
      throw ModelError(ErrorKind::kProbabilitySum,
                       "student " + student +
                           ": probabilities must sum to 1 (got " +
                           ToString(total) + ")");
    }
  } else if (const auto* beta = std::get_if<BetaTwoFeature>(&dist)) {
    if (num_features != 2) {
      throw ModelError(ErrorKind::kDimensionMismatch,
                       "student " + student +
                           ": beta2 distribution needs exactly 2 features");
    }
    if (!(beta->alpha > 0) || !(beta->beta > 0) || !std::isfinite(beta->alpha) ||
        !std::isfinite(beta->beta)) {
      throw ModelError(ErrorKind::kInvalidParameter,
                       "student " + student +
                           ": beta2 shape parameters must be positive");
    }
  }
}

}  // namespace

bool IsContinuous(const WeightDistribution& dist, int num_features) {
  if (std::holds_alternative<BetaTwoFeature>(dist)) return true;
  if (std::holds_alternative<UniformSimplex>(dist)) return num_features >= 2;
  return false;
}

WeightDistribution PointMass(std::vector<Rational> weights) {
  return DiscreteWeights{{WeightPoint{std::move(weights), Rational(1)}}};
}

Instance::Instance(Data data) : data_(std::move(data)) {
  const int n = num_students();
  const int m = num_colleges();
  rank_.assign(m, std::vector<int>(n, 0));
  for (int c = 0; c < m; ++c) {
    for (int pos = 0; pos < n; ++pos) rank_[c][data_.college_prefs[c][pos]] = pos;
  }
}

Instance Instance::Create(Data data) {
  const int n = static_cast<int>(data.students.size());
  const int m = static_cast<int>(data.colleges.size());
  const int num_f = static_cast<int>(data.features.size());
  if (n == 0) throw ModelError(ErrorKind::kMalformedDocument, "no students");
  if (m == 0) throw ModelError(ErrorKind::kMalformedDocument, "no colleges");
  if (num_f == 0) throw ModelError(ErrorKind::kMalformedDocument, "no features");
  CheckUniqueIds(data.students, "student");
  CheckUniqueIds(data.colleges, "college");
  CheckUniqueIds(data.features, "feature");

  if (static_cast<int>(data.capacities.size()) != m) {
    throw ModelError(ErrorKind::kDimensionMismatch,
                     "capacities must list every college");
  }
  for (int c = 0; c < m; ++c) {
    if (data.capacities[c] < 1) {
      throw ModelError(ErrorKind::kNonPositiveCapacity,
                       "college " + data.colleges[c] +
                           ": capacity must be positive");
    }
  }

  if (static_cast<int>(data.college_prefs.size()) != m) {
    throw ModelError(ErrorKind::kIncompletePreference,
                     "college preferences must be given for every college");
  }
  for (int c = 0; c < m; ++c) {
    const auto& order = data.college_prefs[c];
    std::vector<bool> seen(n, false);
    bool complete = static_cast<int>(order.size()) == n;
    for (int s : order) {
      if (s < 0 || s >= n || seen[s]) {
        complete = false;
        break;
      }
      seen[s] = true;
    }
    if (!complete) {
      throw ModelError(ErrorKind::kIncompletePreference,
                       "college " + data.colleges[c] +
                           ": preference must rank every student exactly once");
    }
  }

  if (static_cast<int>(data.utilities.size()) != n) {
    throw ModelError(ErrorKind::kDimensionMismatch,
                     "utilities must be given for every student");
  }
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(data.utilities[s].size()) != num_f) {
      throw ModelError(ErrorKind::kDimensionMismatch,
                       "student " + data.students[s] +
                           ": utilities must cover every feature");
    }
    for (int f = 0; f < num_f; ++f) {
      if (static_cast<int>(data.utilities[s][f].size()) != m) {
        throw ModelError(ErrorKind::kDimensionMismatch,
                         "student " + data.students[s] + ", feature " +
                             data.features[f] +
                             ": utilities must cover every college");
      }
      for (int c = 0; c < m; ++c) {
        const Rational& u = data.utilities[s][f][c];
        if (u < 0 || u > 1) {
          throw ModelError(ErrorKind::kUtilityOutOfRange,
                           "student " + data.students[s] + ", feature " +
                               data.features[f] + ", college " +
                               data.colleges[c] + ": utility " + ToString(u) +
                               " outside [0,1]");
        }
      }
    }
  }

  if (static_cast<int>(data.weight_dists.size()) != n) {
    throw ModelError(ErrorKind::kDimensionMismatch,
                     "weight distributions must be given for every student");
  }
  for (int s = 0; s < n; ++s) {
    CheckWeightDistribution(data.weight_dists[s], num_f, data.students[s]);
  }
  return Instance(std::move(data));
}

std::optional<int> Instance::FindStudent(const std::string& id) const {
  auto it = std::find(data_.students.begin(), data_.students.end(), id);
  if (it == data_.students.end()) return std::nullopt;
  return static_cast<int>(it - data_.students.begin());
}

std::optional<int> Instance::FindCollege(const std::string& id) const {
  auto it = std::find(data_.colleges.begin(), data_.colleges.end(), id);
  if (it == data_.colleges.end()) return std::nullopt;
  return static_cast<int>(it - data_.colleges.begin());
}

int Instance::total_capacity() const {
  int total = 0;
  for (int x : data_.capacities) total += x;
  return total;
}

Instance Instance::WithStudentReport(
    int s, std::vector<std::vector<Rational>> utilities,
    WeightDistribution dist) const {
  Data copy = data_;
  copy.utilities.at(s) = std::move(utilities);
  copy.weight_dists.at(s) = std::move(dist);
  return Create(std::move(copy));
}

bool operator==(const Instance& a, const Instance& b) {
  const auto& x = a.data_;
  const auto& y = b.data_;
  return x.students == y.students && x.colleges == y.colleges &&
         x.capacities == y.capacities && x.college_prefs == y.college_prefs &&
         x.features == y.features && x.utilities == y.utilities &&
         x.weight_dists == y.weight_dists;
}

Matching::Matching(int num_students, int num_colleges)
    : assignment_(num_students, kUnmatched), enrolled_(num_colleges) {}

Matching::Matching(std::vector<int> assignment, int num_colleges)
    : assignment_(std::move(assignment)), enrolled_(num_colleges) {
  for (int s = 0; s < static_cast<int>(assignment_.size()); ++s) {
    int c = assignment_[s];
    if (c == kUnmatched) continue;
    if (c < 0 || c >= num_colleges) {
      throw ModelError(ErrorKind::kUnknownId,
                       "student " + std::to_string(s) +
                           " assigned to unknown college index " +
                           std::to_string(c));
    }
    enrolled_[c].push_back(s);
  }
}

FeasibilityVerdict ValidateMatching(const Instance& inst, const Matching& m) {
  if (m.num_students() != inst.num_students()) {
    throw ModelError(ErrorKind::kUnknownId,
                     "matching covers " + std::to_string(m.num_students()) +
                         " students, instance has " +
                         std::to_string(inst.num_students()));
  }
  if (m.num_colleges() != inst.num_colleges()) {
    throw ModelError(ErrorKind::kUnknownId,
                     "matching covers " + std::to_string(m.num_colleges()) +
                         " colleges, instance has " +
                         std::to_string(inst.num_colleges()));
  }
  for (int c = 0; c < inst.num_colleges(); ++c) {
    const auto& held = m.students_of(c);
    if (static_cast<int>(held.size()) > inst.capacity(c)) {
      return {false, "college " + inst.college_id(c) + " holds " +
                         std::to_string(held.size()) +
                         " students but has capacity " +
                         std::to_string(inst.capacity(c))};
    }
    for (int s : held) {
      if (m.college_of(s) != c) {
        return {false, "reverse map of college " + inst.college_id(c) +
                           " disagrees with student " + inst.student_id(s)};
      }
    }
  }
  for (int s = 0; s < inst.num_students(); ++s) {
    int c = m.college_of(s);
    if (c == kUnmatched) continue;
    const auto& held = m.students_of(c);
    if (std::find(held.begin(), held.end(), s) == held.end()) {
      return {false, "student " + inst.student_id(s) +
                         " missing from reverse map"};
    }
  }
  return {};
}

std::string FormatMatching(const Instance& inst, const Matching& m) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int c = 0; c < inst.num_colleges(); ++c) {
    const auto& held = m.students_of(c);
    if (held.empty()) continue;
    if (!first) out << ", ";
    first = false;
    out << inst.college_id(c) << ':';
    for (std::size_t i = 0; i < held.size(); ++i) {
      if (i > 0) out << '+';
      out << inst.student_id(held[i]);
    }
  }
  for (int s = 0; s < inst.num_students(); ++s) {
    if (m.is_matched(s)) continue;
    if (!first) out << ", ";
    first = false;
    out << inst.student_id(s) << ":-";
  }
  out << '}';
  return out.str();
}

bool CollegeWouldAdmit(const Instance& inst, const Matching& m, int c, int s) {
  const auto& held = m.students_of(c);
  if (static_cast<int>(held.size()) < inst.capacity(c)) return true;
  for (int other : held) {
    if (inst.CollegePrefers(c, s, other)) return true;
  }
  return false;
}

}  // namespace schoolchoice
