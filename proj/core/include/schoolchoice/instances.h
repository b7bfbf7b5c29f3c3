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

// Instance generators: seeded random instances, the fixed worked instances
// and worst-case families, and the rescaling that swaps a mean-equals-median
// two-feature student for a uniform one.

#ifndef SCHOOLCHOICE_INSTANCES_H_
#define SCHOOLCHOICE_INSTANCES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schoolchoice/model.h"
#include "schoolchoice/rational.h"

namespace schoolchoice {

// ---------------------------------------------------------------------------
// Random instances.

enum class DistKind {
  kUniform,    // flat over the simplex
  kBeta,       // two features; alpha, beta from DistSpec
  kDiscrete,   // random finite support
  kPointMass,  // one random weight vector
};

struct DistSpec {
  DistKind kind = DistKind::kUniform;
  double alpha = 2.0;
  double beta = 2.0;
  int support_size = 3;  // kDiscrete
};

// "uniform", "beta2", "discrete", "point_mass".
const char* DistKindName(DistKind kind);
std::optional<DistKind> ParseDistKind(std::string_view name);

enum class CapacityRule {
  kOnes,       // every college has one seat
  kTightSeats  // n seats in total, spread as evenly as possible
};

const char* CapacityRuleName(CapacityRule rule);  // "ones", "tight"
std::optional<CapacityRule> ParseCapacityRule(std::string_view name);

// Throws ModelError(kInvalidParameter) for kTightSeats when m > n.
std::vector<int> Capacities(CapacityRule rule, int n, int m);

struct RandomSpec {
  int n = 3;
  int m = 3;
  std::vector<int> capacities;  // empty means all ones
  int num_features = 2;
  DistSpec dist;
  std::uint64_t seed = 0;
};

// Utilities are k / 10^6 with k uniform in [1, 10^6 - 1]; each college ranks
// students by a uniform random permutation. Deterministic in the seed.
Instance GenRandom(const RandomSpec& spec);

// ---------------------------------------------------------------------------
// Fixed instances and families.

enum class Family {
  kContrast1,      // LOCV loses to the other three strategies
  kContrast2,      // LOCV beats the other three
  kContrast3,      // HERF departs from LOICV and HEUF
  kIcrConflict,    // no rule is both manipulation-resistant and near-optimal
  kZeroRatio,      // HEUF, LOCV and LOICV get an arbitrarily small ratio
  kHerfTight,      // HERF's ratio approaches (1/n)^n
  kGoldenRatio,    // blocks of three students with two free parameters
  kNonTransitive,  // three features, pairwise preference cycle
};

inline constexpr Family kAllFamilies[] = {
    Family::kContrast1,   Family::kContrast2, Family::kContrast3,
    Family::kIcrConflict, Family::kZeroRatio, Family::kHerfTight,
    Family::kGoldenRatio, Family::kNonTransitive};

// "contrast1", "contrast2", "contrast3", "icr-conflict", "zero-ratio",
// "herf-tight", "golden-ratio", "non-transitive".
const char* FamilyName(Family family);
std::optional<Family> ParseFamily(std::string_view name);

struct FamilyParams {
  Family family = Family::kContrast1;
  Rational delta{1, 10};
  Rational epsilon{1, 1000};
  int n = 3;           // kHerfTight
  int k = 1;           // kGoldenRatio: number of blocks
  Rational y{1, 2};    // kGoldenRatio
  Rational z{1, 2};    // kGoldenRatio
  // kNonTransitive: flat weights instead of the four-point distribution.
  bool flat_weights = false;
};

// Family defaults: delta 1/10 and epsilon 1/1000, except kHerfTight
// (epsilon 1/10^6) and kNonTransitive (epsilon 1/20).
FamilyParams DefaultParams(Family family);

// Throws ModelError(kInvalidParameter) for parameters outside the family's
// range (delta, epsilon > 0; kHerfTight needs n >= 2 and
// delta <= 2/(n(n-1)); y, z in [0,1]; k >= 1), or when they push a utility
// out of [0,1].
Instance Canonical(const FamilyParams& params);

// ---------------------------------------------------------------------------
// Uniform equivalent.

struct TransformResult {
  Instance instance;
  Number a;  // 1 - E[w_1]
};

// Replaces student s's weights by the flat distribution and rescales its
// utilities to u_1' = 2(1 - A) u_1, u_2' = 2 A u_2 with A = 1 - E[w_1].
// Requires two features and a continuous distribution whose mean is also a
// median. Throws ModelError(kInvalidParameter) otherwise, or when a rescaled
// utility leaves [0,1].
TransformResult ReduceToUniform(const Instance& inst, int s);

}  // namespace schoolchoice

#endif  // SCHOOLCHOICE_INSTANCES_H_
