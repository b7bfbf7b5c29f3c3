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

#include "schoolchoice/oracle.h"

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "schoolchoice/gda.h"
#include "schoolchoice/instances.h"
#include "schoolchoice/prob.h"
#include "support/oracles.h"
#include "support/test_util.h"

namespace schoolchoice {
namespace {

using testing::ExactEq;
using testing::Fam;
using testing::M;
using testing::Q;

Instance Sized(int n, int m, std::vector<int> caps = {}) {
  RandomSpec spec;
  spec.n = n;
  spec.m = m;
  spec.capacities = std::move(caps);
  return GenRandom(spec);
}

TEST(EnumerateMatchings, Counts) {
  EXPECT_EQ(EnumerateMatchings(Sized(2, 2)).size(), 7u);
  EXPECT_EQ(EnumerateMatchings(Sized(1, 1)).size(), 2u);
  EXPECT_EQ(EnumerateMatchings(Sized(3, 3)).size(), 34u);
  EXPECT_EQ(EnumerateMatchings(Sized(4, 4)).size(), 209u);
}

TEST(EnumerateMatchings, AgreesWithCountingFormula) {
  const std::vector<std::vector<int>> cases = {{1, 1, 1}, {2, 1}, {2, 2}, {3, 1, 1}, {1, 2, 1, 1}};
  for (int n = 1; n <= 5; ++n) {
    for (const auto& caps : cases) {
      Instance inst = Sized(n, static_cast<int>(caps.size()), caps);
      std::vector<Matching> all = EnumerateMatchings(inst);
      EXPECT_EQ(all.size(), testing::CountMatchings(n, caps));
      std::set<std::vector<int>> unique;
      for (const Matching& m : all) {
        EXPECT_TRUE(ValidateMatching(inst, m).ok);
        unique.insert(m.assignment());
      }
      EXPECT_EQ(unique.size(), all.size());
    }
  }
}

TEST(EnumerateMatchings, Budget) {
  Instance inst = Sized(4, 4);
  EXPECT_EQ(AssignmentSpaceSize(inst), 625u);
  EXPECT_THROW(EnumerateMatchings(inst, 624), BudgetExceeded);
  EXPECT_NO_THROW(EnumerateMatchings(inst, 625));
}

TEST(EnumerateMatchings, FirstIsEmptyAndEarlyStop) {
  Instance inst = Sized(2, 2);
  int seen = 0;
  ForEachMatching(inst, [&](const Matching& m) {
    if (seen == 0) EXPECT_EQ(m, Matching(2, 2));
    return ++seen < 3;
  });
  EXPECT_EQ(seen, 3);
}

TEST(OptimalPros, Goldens) {
  OptResult one = OptimalPros(Fam(Family::kContrast1));
  EXPECT_TRUE(ExactEq(one.best_pros.value, "1"));
  EXPECT_EQ(one.matchings_examined, 34u);

  Instance zero = Fam(Family::kZeroRatio);
  OptResult z = OptimalPros(zero);
  Rational d(1, 10), e(1, 1000);
  Rational expected = (d + 2 * e) / (2 * d + 6 * e);
  EXPECT_EQ(z.best_pros.value.exact(), expected);
  EXPECT_EQ(z.best_matching, M(zero, R"({"c1":["s2"],"c2":["s3"],"c3":["s1"]})"));
}

TEST(OptimalPros, SingleStudent) {
  Instance inst = Sized(1, 1);
  OptResult r = OptimalPros(inst);
  EXPECT_EQ(r.best_matching.college_of(0), 0);
  EXPECT_TRUE(ExactEq(r.best_pros.value, "1"));
}

TEST(OptimalPros, NeedsExactEvaluator) {
  FamilyParams params = DefaultParams(Family::kNonTransitive);
  params.flat_weights = true;
  EXPECT_THROW(OptimalPros(Canonical(params)), std::invalid_argument);
}

// Independent maximization: plain nested loops over assignment vectors.
Rational BruteMax(const Instance& inst) {
  const int n = inst.num_students();
  const int m = inst.num_colleges();
  std::vector<int> a(n, kUnmatched);
  Rational best = -1;
  while (true) {
    std::vector<int> load(m, 0);
    bool ok = true;
    for (int c : a) {
      if (c != kUnmatched && ++load[c] > inst.capacity(c)) ok = false;
    }
    if (ok) {
      Rational p = ProsExact2F(inst, Matching(a, m)).value.exact();
      if (p > best) best = p;
    }
    int s = n - 1;
    while (s >= 0 && ++a[s] == m) a[s--] = kUnmatched;
    if (s < 0) break;
  }
  return best;
}

TEST(ApproxRatio, ThirdExample) {
  Instance three = Fam(Family::kContrast3);
  RatioResult r = ApproxRatio(three, Strategy::kLoicv);
  EXPECT_TRUE(ExactEq(r.pros.value, "9/17"));
  Rational opt = BruteMax(three);
  EXPECT_EQ(r.optimal.best_pros.value.exact(), opt);
  EXPECT_EQ(r.ratio.exact(), Rational(9, 17) / opt);
}

TEST(ApproxRatio, ZeroRatioHeuf) {
  RatioResult r = ApproxRatio(Fam(Family::kZeroRatio), Strategy::kHeuf);
  EXPECT_TRUE(ExactEq(r.ratio, "2/101"));
}

TEST(ApproxRatio, HerfTight) {
  Instance inst = Fam(Family::kHerfTight);
  RatioResult r = ApproxRatio(inst, Strategy::kHerf);
  Rational e(1, 1000000), d(1, 10);
  Rational end = Rational(1, 3) + e / (3 * d);
  Rational middle = Rational(1, 3) + 2 * e / (3 * d);
  EXPECT_EQ(r.ratio.exact(), end * end * middle);
  EXPECT_TRUE(ExactEq(r.optimal.best_pros.value, "1"));
}

TEST(ApproxRatio, OptimumDominatesAndHerfBound) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomSpec spec;
    spec.n = spec.m = 3;
    spec.seed = seed;
    Instance inst = GenRandom(spec);
    OptResult opt = OptimalPros(inst);
    EXPECT_EQ(opt.best_pros.value.exact(), BruteMax(inst));
    for (Strategy st : kAllStrategies) {
      RatioResult r = ApproxRatio(inst, st, opt);
      EXPECT_LE(r.pros.value, opt.best_pros.value);
      if (st == Strategy::kHerf) EXPECT_GE(r.ratio, Number(Rational(1, 27)));
    }
  }
}

TEST(Misreports, SpaceAndDescriptions) {
  std::vector<Misreport> space = DeterministicMisreports(3);
  ASSERT_EQ(space.size(), 7u);
  Instance inst = Fam(Family::kContrast1);
  EXPECT_EQ(space[0].Describe(inst), "truthful");
  EXPECT_EQ(space[1].Describe(inst), "c1>c2>c3");
  EXPECT_EQ(space[6].Describe(inst), "c3>c2>c1");
  EXPECT_THROW(DeterministicMisreports(9, 1000), BudgetExceeded);
}

TEST(Misreports, ApplyEncodesRanks) {
  Instance inst = Fam(Family::kContrast1);
  Instance lied = ApplyMisreport(inst, 1, Misreport{{2, 0, 1}});
  for (int f = 0; f < 2; ++f) {
    EXPECT_EQ(lied.utility(1, f, 2), Q("1"));
    EXPECT_EQ(lied.utility(1, f, 0), Q("2/3"));
    EXPECT_EQ(lied.utility(1, f, 1), Q("1/3"));
  }
  EXPECT_TRUE(std::holds_alternative<UniformSimplex>(lied.weights(1)));
  EXPECT_EQ(lied.utility(0, 0, 0), inst.utility(0, 0, 0));
}

TEST(ImprovementProbability, Conventions) {
  Instance inst = Fam(Family::kContrast1);
  EXPECT_TRUE(ExactEq(ImprovementProbability(inst, 0, 1, kUnmatched).value, "0"));
  EXPECT_TRUE(ExactEq(ImprovementProbability(inst, 0, kUnmatched, 1).value, "1"));
  EXPECT_TRUE(ExactEq(ImprovementProbability(inst, 0, 1, 1).value, "0"));
}

TEST(AuditIc, TruthfulReportNeverImproves) {
  Instance inst = Fam(Family::kContrast3);
  std::vector<Misreport> truthful{Misreport{}};
  for (Strategy st : kAllStrategies) {
    for (const MisreportOutcome& o : ExploreMisreports(inst, st, truthful)) {
      EXPECT_EQ(o.truthful_college, o.misreport_college);
      EXPECT_TRUE(ExactEq(o.improvement.value, "0"));
    }
  }
}

TEST(AuditIc, ExamplesAreCertainlyIncentiveCompatible) {
  for (Family f : {Family::kContrast1, Family::kContrast2, Family::kContrast3}) {
    Instance inst = Fam(f);
    for (Strategy st : kAllStrategies) {
      IcAuditReport r = AuditIc(inst, st, IcLevel::kCertain);
      EXPECT_TRUE(r.violations.empty()) << FamilyName(f) << " " << StrategyName(st);
      EXPECT_EQ(r.misreports_tried, 3u * 7u);
    }
  }
}

TEST(AuditIc, ConflictInstanceLoicvRatio) {
  IcAuditReport r = AuditIc(Fam(Family::kIcrConflict), Strategy::kLoicv, IcLevel::kRatio);
  EXPECT_TRUE(r.violations.empty());
}

TEST(AuditIc, ViolationThresholds) {
  Probability half{Number(Rational(1, 2))};
  Probability more{Number(Rational(51, 100))};
  Probability one{Number(Rational(1))};
  EXPECT_FALSE(IsViolation(IcLevel::kRatio, half));
  EXPECT_TRUE(IsViolation(IcLevel::kRatio, more));
  EXPECT_FALSE(IsViolation(IcLevel::kCertain, more));
  EXPECT_TRUE(IsViolation(IcLevel::kCertain, one));
}

TEST(CheckTransitivity, TwoFeaturesNeverViolate) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomSpec spec;
    spec.m = 5;
    spec.seed = seed;
    spec.dist.kind = seed % 2 ? DistKind::kDiscrete : DistKind::kUniform;
    Instance inst = GenRandom(spec);
    for (int s = 0; s < inst.num_students(); ++s) EXPECT_FALSE(CheckTransitivity(inst, s));
  }
}

TEST(CheckTransitivity, ThreeFeatureWitness) {
  auto triple = CheckTransitivity(Fam(Family::kNonTransitive), 0);
  ASSERT_TRUE(triple.has_value());
  EXPECT_EQ(*triple, (std::array<int, 3>{0, 1, 2}));
  FamilyParams params = DefaultParams(Family::kNonTransitive);
  params.flat_weights = true;
  // The flat density on the same utilities is transitive.
  EXPECT_FALSE(CheckTransitivity(Canonical(params), 0).has_value());
}

TEST(CheckTransitivity, TwoColleges) {
  EXPECT_FALSE(CheckTransitivity(Sized(2, 2), 0));
}

}  // namespace
}  // namespace schoolchoice
