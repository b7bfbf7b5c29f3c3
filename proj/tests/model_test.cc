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

#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "schoolchoice/instances.h"
#include "schoolchoice/json_io.h"
#include "support/test_util.h"

namespace schoolchoice {
namespace {

using testing::Fam;
using testing::M;
using testing::Q;

nlohmann::json Example1Doc() {
  return nlohmann::json::parse(SerializeInstance(Fam(Family::kContrast1)));
}

ErrorKind KindOf(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const ModelError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "document was accepted";
  return ErrorKind::kMalformedDocument;
}

TEST(ParseInstance, ExampleInstance) {
  Instance inst = ParseInstance(Example1Doc().dump());
  EXPECT_EQ(inst.num_students(), 3);
  EXPECT_EQ(inst.num_colleges(), 3);
  EXPECT_EQ(inst.num_features(), 2);
  for (int c = 0; c < 3; ++c) EXPECT_EQ(inst.capacity(c), 1);
}

TEST(ParseInstance, RoundTripsExactly) {
  for (Family f : kAllFamilies) {
    Instance inst = Fam(f);
    EXPECT_EQ(ParseInstance(SerializeInstance(inst)), inst) << FamilyName(f);
  }
  RandomSpec spec;
  spec.dist.kind = DistKind::kBeta;
  spec.seed = 5;
  Instance beta = GenRandom(spec);
  EXPECT_EQ(ParseInstance(SerializeInstance(beta)), beta);
}

TEST(ParseInstance, DecimalUtilitiesAreExact) {
  nlohmann::json doc = Example1Doc();
  doc["utilities"]["s1"]["f1"]["c1"] = "0.65";
  doc["utilities"]["s1"]["f2"]["c1"] = 0.3;
  Instance inst = ParseInstance(doc.dump());
  EXPECT_EQ(inst.utility(0, 0, 0), Q("13/20"));
  EXPECT_EQ(inst.utility(0, 1, 0), Q("3/10"));
}

TEST(ParseInstance, ZeroCapacity) {
  nlohmann::json doc = Example1Doc();
  doc["capacities"]["c2"] = 0;
  try {
    ParseInstance(doc.dump());
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonPositiveCapacity);
    EXPECT_NE(std::string(e.what()).find("capacity must be positive"), std::string::npos);
  }
}

TEST(ParseInstance, ProbabilitiesMustSumToOne) {
  nlohmann::json doc = Example1Doc();
  doc["weight_dists"]["s1"] = {
      {"type", "discrete"},
      {"support", {{{"w", {"1/2", "1/2"}}, {"p", "9/10"}}}}};
  try {
    ParseInstance(doc.dump());
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kProbabilitySum);
    EXPECT_NE(std::string(e.what()).find("probabilities must sum to 1"), std::string::npos);
  }
}

TEST(ParseInstance, DistinctErrorKinds) {
  nlohmann::json doc = Example1Doc();
  EXPECT_EQ(KindOf("{not json"), ErrorKind::kMalformedDocument);

  nlohmann::json bad = doc;
  bad["utilities"]["s2"]["f1"]["c3"] = "3/2";
  EXPECT_EQ(KindOf(bad.dump()), ErrorKind::kUtilityOutOfRange);

  bad = doc;
  bad["college_prefs"]["c1"] = {"s1", "s2"};
  EXPECT_EQ(KindOf(bad.dump()), ErrorKind::kIncompletePreference);

  bad = doc;
  bad["weight_dists"]["s1"] = {{"type", "discrete"},
                               {"support", {{{"w", {"1/3", "1/3", "1/3"}}, {"p", "1"}}}}};
  EXPECT_EQ(KindOf(bad.dump()), ErrorKind::kDimensionMismatch);

  bad = doc;
  bad["weight_dists"]["s1"] = {{"type", "discrete"},
                               {"support", {{{"w", {"1/3", "1/3"}}, {"p", "1"}}}}};
  EXPECT_EQ(KindOf(bad.dump()), ErrorKind::kInvalidWeightVector);
}

TEST(ValidateMatching, ExampleMatchingIsFeasible) {
  Instance inst = Fam(Family::kContrast1);
  Matching m = M(inst, R"({"c1":["s2"],"c2":["s3"],"c3":["s1"]})");
  EXPECT_TRUE(ValidateMatching(inst, m).ok);
  EXPECT_EQ(m.college_of(1), 0);
  EXPECT_EQ(m.students_of(2), std::vector<int>{0});
}

TEST(ValidateMatching, CapacityBreach) {
  Instance inst = Fam(Family::kContrast1);
  Matching m({0, 0, 1}, 3);
  FeasibilityVerdict v = ValidateMatching(inst, m);
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.reason.empty());
}

TEST(ValidateMatching, EmptyMatchingIsFeasible) {
  Instance inst = Fam(Family::kContrast1);
  EXPECT_TRUE(ValidateMatching(inst, Matching(3, 3)).ok);
}

TEST(ValidateMatching, UnknownIds) {
  Instance inst = Fam(Family::kContrast1);
  EXPECT_THROW(M(inst, R"({"c9":["s1"]})"), ModelError);
  EXPECT_THROW(M(inst, R"({"c1":["s9"]})"), ModelError);
  EXPECT_THROW(Matching({0, 5, 1}, 3), ModelError);
}

TEST(Matching, JsonRoundTrip) {
  Instance inst = Fam(Family::kContrast1);
  Matching m = M(inst, R"({"c1":["s2"],"c3":["s1"]})");
  EXPECT_FALSE(m.is_matched(2));
  EXPECT_EQ(MatchingFromJson(inst, MatchingToJson(inst, m)), m);
  EXPECT_EQ(FormatMatching(inst, m).empty(), false);
}

TEST(Instance, WithStudentReportRevalidates) {
  Instance inst = Fam(Family::kContrast1);
  std::vector<std::vector<Rational>> u(2, std::vector<Rational>{Q("2"), Q("0"), Q("0")});
  EXPECT_THROW(inst.WithStudentReport(0, u, UniformSimplex{}), ModelError);
  u[0][0] = u[1][0] = Q("1");
  Instance changed = inst.WithStudentReport(0, u, UniformSimplex{});
  EXPECT_EQ(changed.utility(0, 1, 0), Q("1"));
  EXPECT_EQ(changed.utility(1, 0, 0), inst.utility(1, 0, 0));
}

}  // namespace
}  // namespace schoolchoice
