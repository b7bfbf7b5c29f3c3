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

#include <cmath>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "schoolchoice/gda.h"
#include "schoolchoice/oracle.h"
#include "schoolchoice/prob.h"
#include "support/oracles.h"
#include "support/test_util.h"

namespace schoolchoice {
namespace {

using testing::ExactEq;
using testing::Fam;
using testing::M;
using testing::Q;

TEST(GenRandom, ValidAndDeterministic) {
  RandomSpec spec;
  spec.seed = 7;
  Instance a = GenRandom(spec);
  EXPECT_EQ(a.num_students(), 3);
  EXPECT_EQ(a.num_colleges(), 3);
  EXPECT_EQ(a.num_features(), 2);
  EXPECT_EQ(GenRandom(spec), a);
  spec.seed = 8;
  EXPECT_FALSE(GenRandom(spec) == a);
}

TEST(GenRandom, UtilitiesOnMicroGrid) {
  RandomSpec spec;
  spec.n = spec.m = 4;
  spec.num_features = 3;
  spec.seed = 3;
  Instance inst = GenRandom(spec);
  for (int s = 0; s < 4; ++s) {
    for (int f = 0; f < 3; ++f) {
      for (int c = 0; c < 4; ++c) {
        const Rational& u = inst.utility(s, f, c);
        EXPECT_GT(u, 0);
        EXPECT_LT(u, 1);
        Rational scaled = u * 1000000;
        EXPECT_EQ(scaled.get_den(), 1);
      }
    }
  }
}

TEST(GenRandom, SeatsMatchStudents) {
  RandomSpec spec;
  spec.n = 4;
  spec.m = 2;
  spec.capacities = {2, 2};
  spec.seed = 1;
  Instance inst = GenRandom(spec);
  EXPECT_EQ(inst.total_capacity(), inst.num_students());
  EXPECT_EQ(Capacities(CapacityRule::kTightSeats, 7, 3), (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(Capacities(CapacityRule::kOnes, 7, 3), (std::vector<int>{1, 1, 1}));
  EXPECT_THROW(Capacities(CapacityRule::kTightSeats, 2, 3), ModelError);
}

TEST(GenRandom, EveryDistributionKind) {
  for (DistKind kind : {DistKind::kUniform, DistKind::kBeta, DistKind::kDiscrete,
                        DistKind::kPointMass}) {
    RandomSpec spec;
    spec.dist.kind = kind;
    spec.seed = 2;
    Instance inst = GenRandom(spec);
    EXPECT_EQ(ParseDistKind(DistKindName(kind)), kind);
    const WeightDistribution& w = inst.weights(0);
    switch (kind) {
      case DistKind::kUniform:
        EXPECT_TRUE(std::holds_alternative<UniformSimplex>(w));
        break;
      case DistKind::kBeta:
        EXPECT_TRUE(std::holds_alternative<BetaTwoFeature>(w));
        break;
      case DistKind::kDiscrete:
        EXPECT_EQ(std::get<DiscreteWeights>(w).support.size(), 3u);
        break;
      case DistKind::kPointMass:
        EXPECT_EQ(std::get<DiscreteWeights>(w).support.size(), 1u);
        break;
    }
  }
}

TEST(Canonical, NamesRoundTrip) {
  for (Family f : kAllFamilies) EXPECT_EQ(ParseFamily(FamilyName(f)), f);
  EXPECT_FALSE(ParseFamily("nope").has_value());
}

TEST(Canonical, FirstExampleLocvGolden) {
  Instance one = Fam(Family::kContrast1);
  EXPECT_TRUE(ExactEq(ProsExact2F(one, RunGda(one, Strategy::kLocv).matching).value, "2/11"));
}

TEST(Canonical, ZeroRatioOutputs) {
  Instance inst = Fam(Family::kZeroRatio);
  Rational d(1, 10), e(1, 1000);
  Rational expected = e * (d + 2 * e) / ((d + e) * (d + 3 * e));
  for (Strategy st : {Strategy::kHeuf, Strategy::kLocv, Strategy::kLoicv}) {
    Matching m = RunGda(inst, st).matching;
    EXPECT_EQ(m, M(inst, R"({"c1":["s3"],"c2":["s2"],"c3":["s1"]})")) << StrategyName(st);
    EXPECT_EQ(ProsExact2F(inst, m).value.exact(), expected);
  }
}

TEST(Canonical, NonTransitiveCoordinates) {
  Instance inst = Fam(Family::kNonTransitive);
  EXPECT_EQ(inst.num_features(), 3);
  EXPECT_EQ(inst.utility(0, 0, 0), Q("13/20"));
  EXPECT_EQ(inst.utility(0, 1, 1), Q("1/20"));
  EXPECT_EQ(inst.utility(0, 2, 2), Q("7/10"));
}

TEST(Canonical, NonTransitiveAtomsSitInTheirRegions) {
  Instance inst = Fam(Family::kNonTransitive);
  const auto& support = std::get<DiscreteWeights>(inst.weights(0)).support;
  const std::vector<std::vector<int>> regions = {{0, 1, 2}, {0, 2, 1}, {2, 0, 1}, {1, 2, 0}};
  ASSERT_EQ(support.size(), regions.size());
  for (std::size_t k = 0; k < support.size(); ++k) {
    std::vector<Rational> value(3, 0);
    for (int c = 0; c < 3; ++c) {
      for (int f = 0; f < 3; ++f) value[c] += support[k].weights[f] * inst.utility(0, f, c);
    }
    const auto& r = regions[k];
    EXPECT_GT(value[r[0]], value[r[1]]) << "atom " << k;
    EXPECT_GT(value[r[1]], value[r[2]]) << "atom " << k;
  }
  Rational e(1, 20);
  EXPECT_EQ(PrPrefers(inst, 0, 0, 1, true).value.exact(), Rational(1, 2) + e);
  EXPECT_EQ(PrPrefers(inst, 0, 1, 2, true).value.exact(), Rational(1, 2) + e);
  EXPECT_EQ(PrPrefers(inst, 0, 0, 2, true).value.exact(), 4 * e);
}

// The first and last students' top intervals are clipped at w = 0 and
// w = 1, so only the middle students get the two-sided widening.
Rational HerfTightPros(int n, const Rational& delta, const Rational& epsilon) {
  Rational end = Rational(1, n) + epsilon / (n * delta);
  Rational middle = Rational(1, n) + 2 * epsilon / (n * delta);
  Rational out = end * end;
  for (int i = 2; i < n; ++i) out *= middle;
  return out;
}

TEST(Canonical, HerfTightProperty) {
  for (int n : {2, 3, 4}) {
    FamilyParams p = DefaultParams(Family::kHerfTight);
    p.n = n;
    Instance inst = Canonical(p);
    Matching herf = RunGda(inst, Strategy::kHerf).matching;
    std::vector<int> diagonal(n), cyclic(n);
    for (int i = 0; i < n; ++i) {
      diagonal[i] = i;
      cyclic[i] = (i + n - 1) % n;
    }
    EXPECT_EQ(herf, Matching(diagonal, n));
    EXPECT_EQ(ProsExact2F(inst, herf).value.exact(), HerfTightPros(n, p.delta, p.epsilon));
    EXPECT_TRUE(ExactEq(ProsExact2F(inst, Matching(cyclic, n)).value, "1"));
  }
}

TEST(Canonical, HerfTightAgreesWithGrid) {
  FamilyParams p = DefaultParams(Family::kHerfTight);
  p.n = 4;
  p.epsilon = Rational(1, 100);
  Instance inst = Canonical(p);
  Matching herf = RunGda(inst, Strategy::kHerf).matching;
  double grid = testing::GridPros2F(inst, herf, 200000);
  EXPECT_NEAR(ToDouble(HerfTightPros(4, p.delta, p.epsilon)), grid, 1e-5);
  Rational naive = Rational(1, 4) + 2 * p.epsilon / (4 * p.delta);
  EXPECT_GT(std::abs(ToDouble(naive * naive * naive * naive) - grid), 1e-3);
}

TEST(Canonical, GoldenRatioPositiveMatchings) {
  FamilyParams p = DefaultParams(Family::kGoldenRatio);
  p.y = Q("1/3");
  p.z = Q("2/5");
  Instance inst = Canonical(p);
  std::map<std::vector<int>, Rational> positive;
  ForEachMatching(inst, [&](const Matching& m) {
    Rational v = ProsExact2F(inst, m).value.exact();
    if (v > 0) positive[m.assignment()] = v;
    return true;
  });
  std::map<std::vector<int>, Rational> expected = {
      {{0, 1, 2}, p.z},
      {{1, 0, 2}, p.y},
      {{2, 0, 1}, (1 - p.z) * (1 - p.y)},
  };
  EXPECT_EQ(positive, expected);
}

TEST(Canonical, GoldenRatioTwoBlocksMultiply) {
  FamilyParams p = DefaultParams(Family::kGoldenRatio);
  p.k = 2;
  Instance inst = Canonical(p);
  int count = 0;
  ForEachMatching(inst, [&](const Matching& m) {
    if (ProsExact2F(inst, m).value.exact() > 0) ++count;
    return true;
  });
  EXPECT_EQ(count, 9);
}

TEST(Canonical, InvalidParameters) {
  FamilyParams p = DefaultParams(Family::kZeroRatio);
  p.delta = 0;
  EXPECT_THROW(Canonical(p), ModelError);
  p = DefaultParams(Family::kHerfTight);
  p.delta = Q("1/2");
  EXPECT_THROW(Canonical(p), ModelError);
  p = DefaultParams(Family::kGoldenRatio);
  p.y = Q("3/2");
  EXPECT_THROW(Canonical(p), ModelError);
  p = DefaultParams(Family::kGoldenRatio);
  p.k = 0;
  EXPECT_THROW(Canonical(p), ModelError);
  p = DefaultParams(Family::kIcrConflict);
  p.epsilon = -1;
  try {
    Canonical(p);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidParameter);
  }
}

Instance WithDist(WeightDistribution dist) {
  RandomSpec spec;
  spec.seed = 4;
  Instance inst = GenRandom(spec);
  return inst.WithStudentReport(0, inst.student_utilities(0), std::move(dist));
}

TEST(ReduceToUniform, UniformIsFixedPoint) {
  Instance inst = WithDist(UniformSimplex{});
  TransformResult r = ReduceToUniform(inst, 0);
  EXPECT_TRUE(ExactEq(r.a, "1/2"));
  EXPECT_EQ(r.instance, inst);
}

TEST(ReduceToUniform, SymmetricBetaSwapsDistribution) {
  Instance inst = WithDist(BetaTwoFeature{3, 3});
  TransformResult r = ReduceToUniform(inst, 0);
  EXPECT_TRUE(ExactEq(r.a, "1/2"));
  EXPECT_TRUE(std::holds_alternative<UniformSimplex>(r.instance.weights(0)));
  EXPECT_EQ(r.instance.student_utilities(0), inst.student_utilities(0));
  EXPECT_EQ(r.instance.weights(1), inst.weights(1));
}

TEST(ReduceToUniform, Preconditions) {
  Instance discrete = WithDist(DiscreteWeights{{WeightPoint{{Q("1/4"), Q("3/4")}, Q("1/2")},
                                                WeightPoint{{Q("3/4"), Q("1/4")}, Q("1/2")}}});
  try {
    ReduceToUniform(discrete, 0);
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidParameter);
    EXPECT_NE(std::string(e.what()).find("distribution not continuous"), std::string::npos);
  }
  EXPECT_THROW(ReduceToUniform(WithDist(BetaTwoFeature{2, 5}), 0), ModelError);
  EXPECT_THROW(ReduceToUniform(Fam(Family::kNonTransitive), 0), ModelError);
}

}  // namespace
}  // namespace schoolchoice
