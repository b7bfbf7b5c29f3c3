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

#include "schoolchoice/gda.h"

#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "schoolchoice/instances.h"
#include "schoolchoice/prob.h"
#include "support/oracles.h"
#include "support/test_util.h"

namespace schoolchoice {
namespace {

using testing::ExactEq;
using testing::Fam;
using testing::M;

constexpr int kS3 = 2;
constexpr int kC1 = 0, kC2 = 1, kC3 = 2;

std::vector<std::string> AsStrings(const ComparisonVector& v) {
  std::vector<std::string> out;
  for (const Number& p : v.probs) out.push_back(p.ToString());
  return out;
}

TEST(StrategyNames, RoundTrip) {
  for (Strategy s : kAllStrategies) EXPECT_EQ(ParseStrategy(StrategyName(s)), s);
  EXPECT_EQ(ParseStrategy("LOICV"), Strategy::kLoicv);
  EXPECT_FALSE(ParseStrategy("random").has_value());
}

TEST(ComparisonVectorOf, Goldens) {
  Instance one = Fam(Family::kContrast1);
  std::vector<int> all{kC1, kC2, kC3};
  EXPECT_EQ(AsStrings(ComparisonVectorOf(one, kS3, kC2, all)),
            (std::vector<std::string>{"1/7", "2/5"}));
  EXPECT_EQ(AsStrings(ComparisonVectorOf(one, kS3, kC1, all)),
            (std::vector<std::string>{"6/7", "1"}));
  std::vector<int> rest{kC2, kC3};
  EXPECT_EQ(AsStrings(ComparisonVectorOf(one, kS3, kC3, rest)),
            (std::vector<std::string>{"3/5"}));
  std::vector<int> alone{kC2};
  EXPECT_TRUE(ComparisonVectorOf(one, kS3, kC2, alone).probs.empty());
  EXPECT_THROW(ComparisonVectorOf(one, kS3, kC1, rest), std::invalid_argument);
}

TEST(CompareLex, PrefixAndOrder) {
  ComparisonVector a{{Number(Rational(1, 7)), Number(Rational(2, 5))}};
  ComparisonVector b{{Number(Rational(1, 7)), Number(Rational(1, 2))}};
  ComparisonVector prefix{{Number(Rational(1, 7))}};
  EXPECT_EQ(CompareLex(a, b), -1);
  EXPECT_EQ(CompareLex(b, a), 1);
  EXPECT_EQ(CompareLex(a, a), 0);
  EXPECT_EQ(CompareLex(prefix, a), -1);
}

TEST(Next, Goldens) {
  Instance one = Fam(Family::kContrast1);
  EXPECT_EQ(Next(one, Strategy::kLocv, kS3, {false, false, false}), kC1);
  EXPECT_EQ(Next(one, Strategy::kLoicv, kS3, {true, false, false}), kC3);
  Instance three = Fam(Family::kContrast3);
  EXPECT_EQ(Next(three, Strategy::kHerf, kS3, {false, false, false}), kC1);
}

TEST(Next, AllRejected) {
  Instance one = Fam(Family::kContrast1);
  for (Strategy s : kAllStrategies) {
    EXPECT_THROW(Next(one, s, 0, {true, true, true}), std::invalid_argument);
  }
}

TEST(Next, LocvOrderIsFixed) {
  // Removing the current first choice always yields the next entry of the
  // order seen with nothing rejected.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomSpec spec;
    spec.m = 4;
    spec.seed = seed;
    Instance inst = GenRandom(spec);
    ProposalPolicy policy(inst, 0, Strategy::kLocv);
    std::vector<bool> rejected(4, false);
    std::vector<int> order;
    for (int k = 0; k < 4; ++k) {
      int c = policy.Next(rejected);
      order.push_back(c);
      rejected[c] = true;
    }
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<bool> r(4, false);
      r[order[skip]] = true;
      EXPECT_EQ(policy.Next(r), order[skip == 0 ? 1 : 0]);
    }
  }
}

TEST(RunGda, Goldens) {
  Instance one = Fam(Family::kContrast1);
  EXPECT_EQ(RunGda(one, Strategy::kLocv).matching,
            M(one, R"({"c1":["s2"],"c2":["s3"],"c3":["s1"]})"));
  for (Strategy s : {Strategy::kLoicv, Strategy::kHeuf, Strategy::kHerf}) {
    Matching m = RunGda(one, s).matching;
    EXPECT_EQ(m, M(one, R"({"c1":["s1"],"c2":["s3"],"c3":["s2"]})")) << StrategyName(s);
    EXPECT_TRUE(ExactEq(ProsExact2F(one, m).value, "1"));
  }
  Instance two = Fam(Family::kContrast2);
  EXPECT_EQ(RunGda(two, Strategy::kLoicv).matching,
            M(two, R"({"c1":["s2"],"c2":["s1"],"c3":["s3"]})"));
}

TEST(RunGda, SingleStudentSingleCollege) {
  Instance::Data d;
  d.students = {"s1"};
  d.colleges = {"c1"};
  d.capacities = {1};
  d.college_prefs = {{0}};
  d.features = {"f1", "f2"};
  d.utilities = {{{Rational(1, 2)}, {Rational(1, 3)}}};
  d.weight_dists = {UniformSimplex{}};
  Instance inst = Instance::Create(d);
  for (Strategy s : kAllStrategies) {
    EXPECT_EQ(RunGda(inst, s).matching.college_of(0), 0);
  }
}

TEST(RunGda, TraceInvariants) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomSpec spec;
    spec.n = 4;
    spec.m = 3;
    spec.capacities = {2, 1, 1};
    spec.seed = seed;
    Instance inst = GenRandom(spec);
    for (Strategy st : kAllStrategies) {
      GdaResult r = RunGda(inst, st);
      EXPECT_EQ(r.trace.final, r.matching);
      EXPECT_TRUE(ValidateMatching(inst, r.matching).ok);
      std::vector<std::set<int>> rejected_by(inst.num_students());
      std::vector<std::vector<int>> held(inst.num_colleges());
      for (const GdaRound& round : r.trace.rounds) {
        std::vector<std::vector<int>> offered = held;
        for (auto [s, c] : round.proposals) {
          EXPECT_EQ(rejected_by[s].count(c), 0u) << "re-proposal";
          offered[c].push_back(s);
        }
        for (auto [c, s] : round.rejections) {
          rejected_by[s].insert(c);
          auto& v = offered[c];
          auto it = std::find(v.begin(), v.end(), s);
          ASSERT_NE(it, v.end()) << "rejection of a student not on offer";
          v.erase(it);
        }
        for (int c = 0; c < inst.num_colleges(); ++c) {
          // The held set only improves: its worst member never gets worse.
          if (!held[c].empty() && static_cast<int>(offered[c].size()) == inst.capacity(c)) {
            auto worst = [&](const std::vector<int>& v) {
              int w = 0;
              for (int s : v) w = std::max(w, inst.college_rank(c, s));
              return w;
            };
            if (static_cast<int>(held[c].size()) == inst.capacity(c)) {
              EXPECT_LE(worst(offered[c]), worst(held[c]));
            }
          }
          EXPECT_LE(static_cast<int>(offered[c].size()), inst.capacity(c));
        }
        held = offered;
      }
      for (int s = 0; s < inst.num_students(); ++s) {
        int c = r.matching.college_of(s);
        if (c != kUnmatched) EXPECT_EQ(rejected_by[s].count(c), 0u);
      }
    }
  }
}

TEST(RunGda, PointMassesGiveClassicalDa) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomSpec spec;
    spec.n = 2 + seed % 4;
    spec.m = 2 + (seed / 4) % 3;
    spec.num_features = 2 + seed % 2;
    spec.dist.kind = DistKind::kPointMass;
    spec.seed = seed;
    Instance inst = GenRandom(spec);
    std::vector<std::vector<int>> orders;
    for (int s = 0; s < inst.num_students(); ++s) {
      const auto& d = std::get<DiscreteWeights>(inst.weights(s));
      orders.push_back(testing::InducedOrder(inst, s, d.support[0].weights));
    }
    Matching reference = testing::TextbookDa(inst, orders);
    for (Strategy st : kAllStrategies) {
      EXPECT_EQ(RunGda(inst, st).matching, reference) << StrategyName(st) << " seed " << seed;
    }
  }
}

TEST(RunGda, Deterministic) {
  RandomSpec spec;
  spec.n = 4;
  spec.m = 4;
  spec.num_features = 3;
  spec.seed = 11;
  Instance inst = GenRandom(spec);
  for (Strategy st : kAllStrategies) {
    EXPECT_EQ(RunGda(inst, st).matching, RunGda(inst, st).matching);
  }
}

}  // namespace
}  // namespace schoolchoice
