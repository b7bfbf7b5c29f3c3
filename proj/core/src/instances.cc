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

#include "schoolchoice/instances.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "schoolchoice/prob.h"
#include "schoolchoice/sampling.h"

namespace schoolchoice {
namespace {

[[noreturn]] void BadParameter(const std::string& what) {
  throw ModelError(ErrorKind::kInvalidParameter, what);
}

Rational Q(const char* text) { return ParseRational(text); }

// Uniform integer in [0, bound) by rejection on raw engine output, so the
// stream is the same on every standard library.
std::uint64_t UniformBelow(Engine& engine, std::uint64_t bound) {
  const std::uint64_t limit = Engine::max() - Engine::max() % bound;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return x % bound;
}

std::vector<int> RandomPermutation(Engine& engine, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(UniformBelow(engine, static_cast<std::uint64_t>(i) + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

// A point of the simplex with coordinates on the 1/1000 grid.
std::vector<Rational> RandomSimplexPoint(Engine& engine, int num_features) {
  constexpr int kGrid = 1000;
  std::vector<int> cuts;
  for (int f = 0; f + 1 < num_features; ++f) {
    cuts.push_back(static_cast<int>(UniformBelow(engine, kGrid + 1)));
  }
  cuts.push_back(0);
  cuts.push_back(kGrid);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> w;
  for (std::size_t i = 1; i < cuts.size(); ++i) w.push_back(Fraction(cuts[i] - cuts[i - 1], kGrid));
  return w;
}

WeightDistribution RandomDistribution(Engine& engine, const DistSpec& spec,
                                      int num_features) {
  switch (spec.kind) {
    case DistKind::kUniform:
      return UniformSimplex{};
    case DistKind::kBeta:
      if (num_features != 2) BadParameter("beta weights need exactly two features");
      return BetaTwoFeature{spec.alpha, spec.beta};
    case DistKind::kPointMass:
      return PointMass(RandomSimplexPoint(engine, num_features));
    case DistKind::kDiscrete: {
      if (spec.support_size < 1) BadParameter("support size must be positive");
      DiscreteWeights d;
      std::vector<int> mass;
      int total = 0;
      for (int i = 0; i < spec.support_size; ++i) {
        mass.push_back(1 + static_cast<int>(UniformBelow(engine, 100)));
        total += mass.back();
      }
      for (int i = 0; i < spec.support_size; ++i) {
        d.support.push_back({RandomSimplexPoint(engine, num_features), Fraction(mass[i], total)});
      }
      return d;
    }
  }
  return UniformSimplex{};
}

Instance::Data Skeleton(int n, int m, int num_features) {
  Instance::Data d;
  for (int i = 1; i <= n; ++i) d.students.push_back("s" + std::to_string(i));
  for (int j = 1; j <= m; ++j) d.colleges.push_back("c" + std::to_string(j));
  for (int f = 1; f <= num_features; ++f) d.features.push_back("f" + std::to_string(f));
  d.capacities.assign(m, 1);
  d.college_prefs.assign(m, {});
  d.utilities.assign(n, std::vector<std::vector<Rational>>(
                            num_features, std::vector<Rational>(m, Rational(0))));
  d.weight_dists.assign(n, UniformSimplex{});
  return d;
}

// 1-based student list to a 0-based preference.
std::vector<int> Prefs(std::initializer_list<int> one_based) {
  std::vector<int> out;
  for (int s : one_based) out.push_back(s - 1);
  return out;
}

void SetRow(Instance::Data& d, int s, int f, std::initializer_list<const char*> values) {
  int c = 0;
  for (const char* v : values) d.utilities[s][f][c++] = Q(v);
}

void SetBoth(Instance::Data& d, int s, std::initializer_list<const char*> values) {
  SetRow(d, s, 0, values);
  SetRow(d, s, 1, values);
}

Instance Build(Instance::Data d) {
  try {
    return Instance::Create(std::move(d));
  } catch (const ModelError& e) {
    if (e.kind() == ErrorKind::kUtilityOutOfRange) {
      BadParameter(std::string("parameters push a utility out of [0,1]: ") + e.what());
    }
    throw;
  }
}

Instance Contrast1() {
  Instance::Data d = Skeleton(3, 3, 2);
  d.college_prefs = {Prefs({1, 2, 3}), Prefs({1, 3, 2}), Prefs({2, 3, 1})};
  SetRow(d, 0, 0, {"0.3", "0.2", "1.0"});
  SetRow(d, 0, 1, {"0.7", "0.4", "0.3"});
  SetRow(d, 1, 0, {"0.5", "0.1", "0.7"});
  SetRow(d, 1, 1, {"0.6", "0.3", "0.1"});
  SetRow(d, 2, 0, {"0.9", "0.3", "0.6"});
  SetRow(d, 2, 1, {"0.2", "0.3", "0.1"});
  return Build(std::move(d));
}

Instance Contrast2() {
  Instance::Data d = Skeleton(3, 3, 2);
  d.college_prefs = {Prefs({3, 1, 2}), Prefs({2, 3, 1}), Prefs({2, 3, 1})};
  SetRow(d, 0, 0, {"0.9", "0.7", "0.75"});
  SetRow(d, 0, 1, {"0.1", "0.7", "0.8"});
  SetBoth(d, 1, {"0.9", "0.5", "0.1"});
  SetBoth(d, 2, {"0.5", "0.1", "0.9"});
  return Build(std::move(d));
}

Instance Contrast3() {
  Instance::Data d = Skeleton(3, 3, 2);
  d.college_prefs = {Prefs({1, 3, 2}), Prefs({3, 2, 1}), Prefs({1, 3, 2})};
  for (int s : {0, 1}) {
    SetRow(d, s, 0, {"0.25", "0.3", "0.8"});
    SetRow(d, s, 1, {"0.4", "0.3", "0.7"});
  }
  SetRow(d, 2, 0, {"0.1", "1.0", "0.8"});
  SetRow(d, 2, 1, {"1.0", "0.2", "0.5"});
  return Build(std::move(d));
}

void CheckDeltaEpsilon(const FamilyParams& p) {
  if (p.delta <= 0) BadParameter("delta must be positive");
  if (p.epsilon <= 0) BadParameter("epsilon must be positive");
}

Instance IcrConflict(const FamilyParams& p) {
  CheckDeltaEpsilon(p);
  const Rational& dl = p.delta;
  const Rational& e = p.epsilon;
  Instance::Data d = Skeleton(3, 3, 2);
  d.college_prefs = {Prefs({1, 2, 3}), Prefs({1, 2, 3}), Prefs({1, 3, 2})};
  d.utilities[0][0] = {Rational(Q("1.5") * dl + 3 * e), Rational(dl + 2 * e), Rational(0)};
  d.utilities[0][1] = {Rational(0), Rational(Q("0.5") * dl + 2 * e),
                       Rational(Q("1.5") * dl + 2 * e)};
  SetBoth(d, 1, {"0.3", "0.6", "0.1"});
  SetBoth(d, 2, {"0.3", "0.1", "0.6"});
  return Build(std::move(d));
}

Instance ZeroRatio(const FamilyParams& p) {
  CheckDeltaEpsilon(p);
  const Rational& dl = p.delta;
  const Rational& e = p.epsilon;
  const Rational base = Q("0.1");
  Instance::Data d = Skeleton(3, 3, 2);
  d.college_prefs = {Prefs({2, 3, 1}), Prefs({2, 3, 1}), Prefs({3, 2, 1})};
  SetRow(d, 0, 0, {"0.75", "0.5", "0.55"});
  SetRow(d, 0, 1, {"0.55", "0.25", "0.1"});
  d.utilities[1][0] = {Rational(base + Q("1.5") * dl + 3 * e), Rational(base + dl + 2 * e),
                       base};
  d.utilities[1][1] = {base, Rational(base + Q("0.5") * dl + 2 * e),
                       Rational(base + Q("1.5") * dl + 2 * e)};
  SetBoth(d, 2, {"0.3", "0.2", "0.1"});
  return Build(std::move(d));
}

Instance HerfTight(const FamilyParams& p) {
  CheckDeltaEpsilon(p);
  const int n = p.n;
  if (n < 2) BadParameter("herf-tight needs n >= 2");
  if (p.delta > Fraction(2, n * (n - 1))) BadParameter("herf-tight needs delta <= 2/(n(n-1))");
  // nu[k] for k = 1..n: nu_1 = 0, nu_k = nu_{k-1} + (n - k + 1) delta.
  std::vector<Rational> nu(n + 1, Rational(0));
  for (int k = 2; k <= n; ++k) nu[k] = nu[k - 1] + (n - k + 1) * p.delta;
  Instance::Data d = Skeleton(n, n, 2);
  for (int j = 1; j <= n; ++j) {
    // s_{j+1} first, s_j last, the rest in index order.
    std::vector<int> order;
    const int top = j % n;  // 0-based index of s_{j+1}
    const int bottom = j - 1;
    order.push_back(top);
    for (int s = 0; s < n; ++s) {
      if (s != top && s != bottom) order.push_back(s);
    }
    order.push_back(bottom);
    d.college_prefs[j - 1] = std::move(order);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Rational bump = (i == j) ? p.epsilon : Rational(0);
      d.utilities[i - 1][0][j - 1] = nu[j] + bump;
      d.utilities[i - 1][1][j - 1] = nu[n - j + 1] + bump;
    }
  }
  return Build(std::move(d));
}

Instance GoldenRatio(const FamilyParams& p) {
  if (p.k < 1) BadParameter("golden-ratio needs k >= 1");
  if (p.y < 0 || p.y > 1) BadParameter("golden-ratio needs y in [0,1]");
  if (p.z < 0 || p.z > 1) BadParameter("golden-ratio needs z in [0,1]");
  const int n = 3 * p.k;
  Instance::Data d = Skeleton(n, n, 2);
  const Rational shift = Q("0.4");
  const Rational scale = Q("1.4");
  auto prefs_with_head = [n](std::vector<int> head) {
    for (int s = 0; s < n; ++s) {
      if (std::find(head.begin(), head.end(), s) == head.end()) head.push_back(s);
    }
    return head;
  };
  for (int b = 0; b < p.k; ++b) {
    const int i = 3 * b;
    d.college_prefs[i] = prefs_with_head({i + 1, i, i + 2});
    d.college_prefs[i + 1] = prefs_with_head({i, i + 1, i + 2});
    d.college_prefs[i + 2] = prefs_with_head({i, i + 2});

    // Raw utilities as (college, f1, f2); unspecified colleges get a tail.
    struct Spec {
      int college;
      Rational f1;
      Rational f2;
    };
    const std::vector<std::vector<Spec>> specs = {
        {{i, 1, 1}, {i + 1, Q("0.8"), Rational(p.y - Q("0.2"))},
         {i + 2, Rational(Q("0.8") - p.y), Q("0.8")}},
        {{i, Rational(1 - p.z), 1}, {i + 1, 1, p.z}},
        {{i + 2, 1, 1}},
    };
    for (int r = 0; r < 3; ++r) {
      const int s = i + r;
      std::vector<bool> given(n, false);
      Rational lowest = 1;
      for (const Spec& sp : specs[r]) {
        given[sp.college] = true;
        d.utilities[s][0][sp.college] = sp.f1;
        d.utilities[s][1][sp.college] = sp.f2;
        lowest = std::min(lowest, std::min(sp.f1, sp.f2));
      }
      const int tail = n - static_cast<int>(specs[r].size());
      int t = 0;
      for (int c = 0; c < n; ++c) {
        if (given[c]) continue;
        ++t;
        Rational v = lowest - Fraction(t, 5 * (tail + 1));
        d.utilities[s][0][c] = v;
        d.utilities[s][1][c] = v;
      }
      // Raw values lie in (-0.4, 1]; a positive affine map onto [0,1] keeps
      // every preference and probability.
      for (int f = 0; f < 2; ++f) {
        for (auto& u : d.utilities[s][f]) u = (u + shift) / scale;
      }
    }
  }
  return Build(std::move(d));
}

Instance NonTransitive(const FamilyParams& p) {
  Instance::Data d = Skeleton(1, 3, 3);
  d.college_prefs = {Prefs({1}), Prefs({1}), Prefs({1})};
  SetRow(d, 0, 0, {"0.65", "0.91", "0.10"});
  SetRow(d, 0, 1, {"0.90", "0.05", "1.00"});
  SetRow(d, 0, 2, {"0.21", "0.31", "0.70"});
  if (!p.flat_weights) {
    const Rational& e = p.epsilon;
    if (e <= 0 || e >= Rational(1, 6)) BadParameter("non-transitive needs 0 < epsilon < 1/6");
    // One atom inside each of the four ordering regions the cycle needs.
    DiscreteWeights w;
    w.support = {
        {{Q("3/5"), Q("7/20"), Q("1/20")}, Rational(2 * e)},       // c1 > c2 > c3
        {{Q("2/5"), Q("3/5"), Q("0")}, Rational(2 * e)},           // c1 > c3 > c2
        {{Q("0"), Q("9/20"), Q("11/20")}, Rational(Q("1/2") - 3 * e)},  // c3 > c1 > c2
        {{Q("2/5"), Q("0"), Q("3/5")}, Rational(Q("1/2") - e)},    // c2 > c3 > c1
    };
    d.weight_dists[0] = std::move(w);
  }
  return Build(std::move(d));
}

}  // namespace

// ---------------------------------------------------------------------------

const char* DistKindName(DistKind kind) {
  switch (kind) {
    case DistKind::kUniform:
      return "uniform";
    case DistKind::kBeta:
      return "beta2";
    case DistKind::kDiscrete:
      return "discrete";
    case DistKind::kPointMass:
      return "point_mass";
  }
  return "unknown";
}

std::optional<DistKind> ParseDistKind(std::string_view name) {
  for (DistKind k : {DistKind::kUniform, DistKind::kBeta, DistKind::kDiscrete,
                     DistKind::kPointMass}) {
    if (name == DistKindName(k)) return k;
  }
  return std::nullopt;
}

const char* CapacityRuleName(CapacityRule rule) {
  return rule == CapacityRule::kOnes ? "ones" : "tight";
}

std::optional<CapacityRule> ParseCapacityRule(std::string_view name) {
  if (name == "ones") return CapacityRule::kOnes;
  if (name == "tight") return CapacityRule::kTightSeats;
  return std::nullopt;
}

std::vector<int> Capacities(CapacityRule rule, int n, int m) {
  if (m < 1) BadParameter("need at least one college");
  if (rule == CapacityRule::kOnes) return std::vector<int>(m, 1);
  if (m > n) BadParameter("tight seats need m <= n");
  std::vector<int> caps(m, n / m);
  for (int c = 0; c < n % m; ++c) ++caps[c];
  return caps;
}

Instance GenRandom(const RandomSpec& spec) {
  if (spec.n < 1 || spec.m < 1) BadParameter("need n >= 1 and m >= 1");
  if (spec.num_features < 1) BadParameter("need at least one feature");
  if (!spec.capacities.empty() && static_cast<int>(spec.capacities.size()) != spec.m) {
    BadParameter("capacities must have one entry per college");
  }
  constexpr std::uint64_t kScale = 1'000'000;
  Engine engine = MakeStream(spec.seed, {});
  Instance::Data d = Skeleton(spec.n, spec.m, spec.num_features);
  if (!spec.capacities.empty()) d.capacities = spec.capacities;
  for (int s = 0; s < spec.n; ++s) {
    for (int f = 0; f < spec.num_features; ++f) {
      for (int c = 0; c < spec.m; ++c) {
        std::uint64_t k = 1 + UniformBelow(engine, kScale - 1);
        d.utilities[s][f][c] = Rational(mpz_class(std::to_string(k)), mpz_class(kScale));
        d.utilities[s][f][c].canonicalize();
      }
    }
  }
  for (int c = 0; c < spec.m; ++c) d.college_prefs[c] = RandomPermutation(engine, spec.n);
  for (int s = 0; s < spec.n; ++s) {
    d.weight_dists[s] = RandomDistribution(engine, spec.dist, spec.num_features);
  }
  return Instance::Create(std::move(d));
}

// ---------------------------------------------------------------------------

const char* FamilyName(Family family) {
  switch (family) {
    case Family::kContrast1:
      return "contrast1";
    case Family::kContrast2:
      return "contrast2";
    case Family::kContrast3:
      return "contrast3";
    case Family::kIcrConflict:
      return "icr-conflict";
    case Family::kZeroRatio:
      return "zero-ratio";
    case Family::kHerfTight:
      return "herf-tight";
    case Family::kGoldenRatio:
      return "golden-ratio";
    case Family::kNonTransitive:
      return "non-transitive";
  }
  return "unknown";
}

std::optional<Family> ParseFamily(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (name == FamilyName(f)) return f;
  }
  return std::nullopt;
}

FamilyParams DefaultParams(Family family) {
  FamilyParams p;
  p.family = family;
  if (family == Family::kHerfTight) p.epsilon = Rational(1, 1'000'000);
  if (family == Family::kNonTransitive) p.epsilon = Rational(1, 20);
  return p;
}

Instance Canonical(const FamilyParams& params) {
  switch (params.family) {
    case Family::kContrast1:
      return Contrast1();
    case Family::kContrast2:
      return Contrast2();
    case Family::kContrast3:
      return Contrast3();
    case Family::kIcrConflict:
      return IcrConflict(params);
    case Family::kZeroRatio:
      return ZeroRatio(params);
    case Family::kHerfTight:
      return HerfTight(params);
    case Family::kGoldenRatio:
      return GoldenRatio(params);
    case Family::kNonTransitive:
      return NonTransitive(params);
  }
  BadParameter("unknown family");
}

TransformResult ReduceToUniform(const Instance& inst, int s) {
  if (s < 0 || s >= inst.num_students()) BadParameter("student index out of range");
  if (inst.num_features() != 2) BadParameter("the uniform equivalent needs two features");
  const WeightDistribution& dist = inst.weights(s);
  if (!IsContinuous(dist, 2)) BadParameter("distribution not continuous");
  MeanWeight mw = MeanWeightOf(inst, s);
  const Number gap = mw.prob_at_most_mean - mw.prob_at_least_mean;
  const bool balanced = gap.is_exact() ? gap == Number(0)
                                       : std::abs(gap.ToDouble()) <= 1e-12;
  if (!balanced) BadParameter("mean of the first weight is not a median");
  if (!mw.mean[0].is_exact()) BadParameter("mean of the first weight is not rational");
  const Rational a = 1 - mw.mean[0].exact();
  std::vector<std::vector<Rational>> utilities = inst.student_utilities(s);
  for (auto& u : utilities[0]) u *= 2 * (1 - a);
  for (auto& u : utilities[1]) u *= 2 * a;
  for (const auto& row : utilities) {
    for (const auto& u : row) {
      if (u < 0 || u > 1) BadParameter("rescaled utility leaves [0,1]");
    }
  }
  return {inst.WithStudentReport(s, std::move(utilities), UniformSimplex{}), Number(a)};
}

}  // namespace schoolchoice
