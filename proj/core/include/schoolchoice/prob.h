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

// Probabilities over aggregated student preferences.
//
// Which evaluation path runs depends on the inputs:
//   * two features: every event is a set of first-feature weights, so it is
//     an interval of [0,1] and its probability is the distribution's measure
//     of that interval (exact for uniform and discrete, closed form for beta);
//   * discrete weights with any number of features: exact support
//     enumeration;
//   * anything else: seeded Monte Carlo.
// The result records which path ran; estimates never masquerade as exact.

#ifndef SCHOOLCHOICE_PROB_H_
#define SCHOOLCHOICE_PROB_H_

#include <cstdint>
#include <span>
#include <vector>

#include "schoolchoice/model.h"
#include "schoolchoice/rational.h"

namespace schoolchoice {

inline constexpr std::uint64_t kDefaultSamples = 100000;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct MonteCarloOptions {
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
};

enum class ProbabilityKind {
  kExact,       // rational
  kClosedForm,  // real, no sampling error (beta cdf)
  kEstimate,    // Monte Carlo
};

struct Probability {
  Number value;
  ProbabilityKind kind = ProbabilityKind::kExact;
  double std_error = 0.0;     // estimates only
  std::uint64_t samples = 0;  // estimates only
  std::uint64_t seed = 0;     // estimates only
};

// Probability that a matching is weakly stable.
using ProsResult = Probability;

const char* KindName(ProbabilityKind kind);

// ---------------------------------------------------------------------------
// Two-feature geometry.

// A set of first-feature weights {w : lower (<|<=) w (<|<=) upper} in [0,1].
struct WeightInterval {
  Rational lower{0};
  Rational upper{1};
  bool lower_closed = true;
  bool upper_closed = true;

  static WeightInterval Full() { return {}; }
  static WeightInterval Empty() { return {Rational(1), Rational(0), false, false}; }

  bool IsEmpty() const;
  bool Contains(const Rational& w) const;
  WeightInterval Intersect(const WeightInterval& other) const;
  friend bool operator==(const WeightInterval&, const WeightInterval&) = default;
};

// The four-way split of Pr[c_i strictly preferred to c_j] on the signs of the
// per-feature utility differences:
//   kAlwaysPreferred  both differences positive
//   kNeverPreferred   both non-positive
//   kThresholdAbove   preferred iff w_1 > eta  (first difference positive)
//   kThresholdBelow   preferred iff w_1 < eta  (second difference positive)
// eta = D2 / (D1 + D2) with D_f the absolute differences, and eta = 0 when
// D2 = 0.
enum class PairwiseTag {
  kAlwaysPreferred,
  kNeverPreferred,
  kThresholdAbove,
  kThresholdBelow,
};

struct PairwiseCase {
  PairwiseTag tag;
  Rational eta;  // meaningful for the threshold tags only
};

// Requires two features; throws std::invalid_argument otherwise.
PairwiseCase PairwiseCase2F(const Instance& inst, int s, int ci, int cj);

// First-feature weights for which s prefers ci to cj (strictly, or weakly).
WeightInterval PreferenceInterval(const Instance& inst, int s, int ci, int cj,
                                  bool strict);

// Measure of `interval` under a two-feature distribution.
Number IntervalMeasure(const WeightDistribution& dist,
                       const WeightInterval& interval);

// ---------------------------------------------------------------------------
// Any number of features.

// ci preferred to cj  <=>  normal . (w_1..w_{F-1}) < offset  (<= if weak),
// where normal_k = delta_F - delta_k, offset = delta_F and delta_f is the
// utility difference on feature f.
struct HalfSpace {
  std::vector<Rational> normal;
  Rational offset;
  bool strict = true;

  bool Contains(std::span<const double> weights) const;
};

HalfSpace PreferenceHalfSpace(const Instance& inst, int s, int ci, int cj,
                              bool strict);

// Pr[ci > cj] (strict) or Pr[ci >= cj] for student s. Requires ci != cj.
Probability PrPrefers(const Instance& inst, int s, int ci, int cj, bool strict,
                      const MonteCarloOptions& mc = {});

// Always samples, whatever the distribution. Used to cross-check the exact
// paths and for distributions whose exact answer is also wanted as an
// estimate.
Probability PrPrefersMonteCarlo(const Instance& inst, int s, int ci, int cj,
                                bool strict, const MonteCarloOptions& mc = {});

// Probability that c is weakly preferred to every other member of `pool`
// simultaneously. Throws std::invalid_argument if c is not in the pool.
Probability PrTop(const Instance& inst, int s, int c, std::span<const int> pool,
                  const MonteCarloOptions& mc = {});

// E[sum_f w_f u_f(c)].
Number ExpectedUtility(const Instance& inst, int s, int c);

struct MeanWeight {
  std::vector<Number> mean;
  // Two features only: Pr[w_1 <= E w_1] and Pr[w_1 >= E w_1].
  bool has_tails = false;
  Number prob_at_most_mean;
  Number prob_at_least_mean;
};

MeanWeight MeanWeightOf(const Instance& inst, int s);

// ---------------------------------------------------------------------------
// Stability of a matching.

// Colleges c != m(s) that would admit s and that s strictly prefers to m(s)
// with positive probability. Each comes with that probability.
struct PotentialBlock {
  int college;
  Probability probability;
};
std::vector<PotentialBlock> PotentialBlocks(const Instance& inst,
                                            const Matching& m, int s,
                                            const MonteCarloOptions& mc = {});

// Two features: the first-feature weights for which student s is in no
// block of m.
WeightInterval NoBlockInterval(const Instance& inst, const Matching& m, int s);

// Exact (or beta closed-form) probability of stability for two features.
// Throws std::invalid_argument for other feature counts or an infeasible
// matching.
ProsResult ProsExact2F(const Instance& inst, const Matching& m);

// Exact probability of stability when every student's weights have finite
// support, by enumerating each student's support.
ProsResult ProsDiscrete(const Instance& inst, const Matching& m);

// Per-student sampling estimate; the product of per-student no-block
// fractions with a delta-method standard error. Throws std::invalid_argument
// when samples == 0.
ProsResult ProsMonteCarlo(const Instance& inst, const Matching& m,
                          std::uint64_t samples, std::uint64_t seed);

// True when an exact or closed-form evaluator exists for the instance.
bool HasExactPros(const Instance& inst);

// Picks the exact path when available and Monte Carlo otherwise.
ProsResult EvaluatePros(const Instance& inst, const Matching& m,
                        const MonteCarloOptions& mc = {});

}  // namespace schoolchoice

#endif  // SCHOOLCHOICE_PROB_H_
