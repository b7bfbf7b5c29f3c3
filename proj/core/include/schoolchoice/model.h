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

// Domain types for school choice with feature-weighted uncertain student
// preferences.
//
// A student s values college c through per-feature utilities u[s][f][c] in
// [0,1]. Her realized preference is the weighted sum sum_f w_f * u[s][f][c]
// for a weight vector w drawn from its own distribution over the simplex
// {w >= 0, sum w = 1}. Colleges rank students by a strict, complete order.
//
// Students, colleges and features are dense indices; the external string ids
// are kept only for I/O.

#ifndef SCHOOLCHOICE_MODEL_H_
#define SCHOOLCHOICE_MODEL_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "schoolchoice/rational.h"

namespace schoolchoice {

enum class ErrorKind {
  kMalformedDocument,
  kNonPositiveCapacity,
  kIncompletePreference,
  kUtilityOutOfRange,
  kDimensionMismatch,
  kProbabilitySum,
  kInvalidWeightVector,
  kInvalidParameter,
  kDuplicateId,
  kUnknownId,
};

class ModelError : public std::runtime_error {
 public:
  ModelError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Flat density over the simplex (the all-ones Dirichlet). With two features
// this makes the first weight uniform on [0,1].
struct UniformSimplex {
  friend bool operator==(const UniformSimplex&, const UniformSimplex&) = default;
};

struct WeightPoint {
  std::vector<Rational> weights;
  Rational probability;
  friend bool operator==(const WeightPoint&, const WeightPoint&) = default;
};

// Finite support. Probabilities are positive and sum to exactly 1.
struct DiscreteWeights {
  std::vector<WeightPoint> support;
  friend bool operator==(const DiscreteWeights&, const DiscreteWeights&) = default;
};

// Two features only: w_1 ~ Beta(alpha, beta), w_2 = 1 - w_1.
struct BetaTwoFeature {
  double alpha = 1.0;
  double beta = 1.0;
  friend bool operator==(const BetaTwoFeature&, const BetaTwoFeature&) = default;
};

using WeightDistribution =
    std::variant<UniformSimplex, DiscreteWeights, BetaTwoFeature>;

// True for distributions without atoms (uniform with at least two features,
// or beta).
bool IsContinuous(const WeightDistribution& dist, int num_features);

// Point mass at `weights` (must lie on the simplex).
WeightDistribution PointMass(std::vector<Rational> weights);

inline constexpr int kUnmatched = -1;

class Instance {
 public:
  // Plain construction record. utilities[s][f][c].
  struct Data {
    std::vector<std::string> students;
    std::vector<std::string> colleges;
    std::vector<int> capacities;
    std::vector<std::vector<int>> college_prefs;  // best first
    std::vector<std::string> features;
    std::vector<std::vector<std::vector<Rational>>> utilities;
    std::vector<WeightDistribution> weight_dists;
  };

  // Validates every invariant and throws ModelError naming the first
  // violation.
  static Instance Create(Data data);

  const Data& data() const { return data_; }

  int num_students() const { return static_cast<int>(data_.students.size()); }
  int num_colleges() const { return static_cast<int>(data_.colleges.size()); }
  int num_features() const { return static_cast<int>(data_.features.size()); }

  const std::string& student_id(int s) const { return data_.students[s]; }
  const std::string& college_id(int c) const { return data_.colleges[c]; }
  const std::string& feature_id(int f) const { return data_.features[f]; }
  std::optional<int> FindStudent(const std::string& id) const;
  std::optional<int> FindCollege(const std::string& id) const;

  int capacity(int c) const { return data_.capacities[c]; }
  int total_capacity() const;

  // 0 is the college's favourite student.
  int college_rank(int c, int s) const { return rank_[c][s]; }
  bool CollegePrefers(int c, int s1, int s2) const {
    return rank_[c][s1] < rank_[c][s2];
  }
  const std::vector<int>& college_order(int c) const {
    return data_.college_prefs[c];
  }

  const Rational& utility(int s, int f, int c) const {
    return data_.utilities[s][f][c];
  }
  // utilities[f][c] for one student.
  const std::vector<std::vector<Rational>>& student_utilities(int s) const {
    return data_.utilities[s];
  }
  const WeightDistribution& weights(int s) const {
    return data_.weight_dists[s];
  }

  // Copy of this instance with student s reporting different utilities and
  // weight distribution.
  Instance WithStudentReport(int s,
                             std::vector<std::vector<Rational>> utilities,
                             WeightDistribution dist) const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  explicit Instance(Data data);

  Data data_;
  std::vector<std::vector<int>> rank_;  // rank_[c][s]
};

// Student -> college (or kUnmatched), with the derived college -> students
// map. Immutable once built.
class Matching {
 public:
  Matching() = default;
  // Everybody unmatched.
  Matching(int num_students, int num_colleges);
  // Throws ModelError(kUnknownId) when an entry is outside
  // [kUnmatched, num_colleges).
  Matching(std::vector<int> assignment, int num_colleges);

  int num_students() const { return static_cast<int>(assignment_.size()); }
  int num_colleges() const { return static_cast<int>(enrolled_.size()); }
  int college_of(int s) const { return assignment_[s]; }
  bool is_matched(int s) const { return assignment_[s] != kUnmatched; }
  const std::vector<int>& students_of(int c) const { return enrolled_[c]; }
  const std::vector<int>& assignment() const { return assignment_; }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.assignment_ == b.assignment_;
  }

 private:
  std::vector<int> assignment_;
  std::vector<std::vector<int>> enrolled_;  // ascending student index
};

struct FeasibilityVerdict {
  bool ok = true;
  std::string reason;
};

// OK iff every college holds at most its capacity and the reverse map agrees
// with the forward map. Throws ModelError(kUnknownId) when the matching's
// dimensions do not fit the instance.
FeasibilityVerdict ValidateMatching(const Instance& inst, const Matching& m);

// "{c1:s2, c2:s3, c3:s1}"; several students per college are joined by '+'.
// Unmatched students are listed as "s4:-" at the end.
std::string FormatMatching(const Instance& inst, const Matching& m);

// True when college c could take student s into matching m: it has a free
// seat, or it holds someone it ranks below s.
bool CollegeWouldAdmit(const Instance& inst, const Matching& m, int c, int s);

}  // namespace schoolchoice

#endif  // SCHOOLCHOICE_MODEL_H_
