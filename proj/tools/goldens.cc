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

#include "goldens.h"

#include <stdexcept>

#include "schoolchoice/gda.h"
#include "schoolchoice/instances.h"
#include "schoolchoice/json_io.h"
#include "schoolchoice/oracle.h"
#include "schoolchoice/prob.h"

namespace schoolchoice::cli {
namespace {

Instance Fam(Family f) { return Canonical(DefaultParams(f)); }

std::string Pros(const Instance& inst, Strategy s) {
  return ProsExact2F(inst, RunGda(inst, s).matching).value.ToString();
}

std::string Matched(const Instance& inst, Strategy s) {
  return FormatMatching(inst, RunGda(inst, s).matching);
}

std::string ProsOf(const Instance& inst, const std::string& matching) {
  return EvaluatePros(inst, ParseMatching(inst, matching)).value.ToString();
}

std::string Vector(const Instance& inst, int s, int c, std::vector<int> pool) {
  std::string out = "(";
  const ComparisonVector v = ComparisonVectorOf(inst, s, c, pool);
  for (std::size_t i = 0; i < v.probs.size(); ++i) {
    if (i > 0) out += ", ";
    out += v.probs[i].ToString();
  }
  return out + ")";
}

std::string Case(const Instance& inst, int s, int a, int b) {
  PairwiseCase pc = PairwiseCase2F(inst, s, a, b);
  switch (pc.tag) {
    case PairwiseTag::kAlwaysPreferred:
      return "always";
    case PairwiseTag::kNeverPreferred:
      return "never";
    case PairwiseTag::kThresholdAbove:
      return "above(" + ToString(pc.eta) + ")";
    case PairwiseTag::kThresholdBelow:
      return "below(" + ToString(pc.eta) + ")";
  }
  return "?";
}

std::string Violations(const Instance& inst, Strategy s, IcLevel level) {
  return std::to_string(AuditIc(inst, s, level).violations.size());
}

void AddContrast(std::vector<Golden>& out) {
  const Strategy others[] = {Strategy::kLoicv, Strategy::kHeuf, Strategy::kHerf};
  // First instance.
  out.push_back({"contrast1.locv.matching", "{c1:s2, c2:s3, c3:s1}",
                 [] { return Matched(Fam(Family::kContrast1), Strategy::kLocv); }});
  out.push_back({"contrast1.locv.pros", "2/11",
                 [] { return Pros(Fam(Family::kContrast1), Strategy::kLocv); }});
  for (Strategy s : others) {
    std::string n = StrategyName(s);
    out.push_back({"contrast1." + n + ".matching", "{c1:s1, c2:s3, c3:s2}",
                   [s] { return Matched(Fam(Family::kContrast1), s); }});
    out.push_back({"contrast1." + n + ".pros", "1", [s] { return Pros(Fam(Family::kContrast1), s); }});
  }
  out.push_back({"contrast1.optimal", "1",
                 [] { return OptimalPros(Fam(Family::kContrast1)).best_pros.value.ToString(); }});
  out.push_back({"contrast1.s3.case(c2,c1)", "below(1/7)",
                 [] { return Case(Fam(Family::kContrast1), 2, 1, 0); }});
  out.push_back({"contrast1.s3.vector(c2)", "(1/7, 2/5)",
                 [] { return Vector(Fam(Family::kContrast1), 2, 1, {0, 1, 2}); }});
  out.push_back({"contrast1.s3.vector(c1)", "(6/7, 1)",
                 [] { return Vector(Fam(Family::kContrast1), 2, 0, {0, 1, 2}); }});
  out.push_back({"contrast1.s3.vector(c3;c2,c3)", "(3/5)",
                 [] { return Vector(Fam(Family::kContrast1), 2, 2, {1, 2}); }});
  const char* eu[][2] = {{"c1", "11/20"}, {"c2", "3/10"}, {"c3", "7/20"}};
  for (int c = 0; c < 3; ++c) {
    out.push_back({std::string("contrast1.s3.expected_utility(") + eu[c][0] + ")", eu[c][1],
                   [c] { return ExpectedUtility(Fam(Family::kContrast1), 2, c).ToString(); }});
  }
  out.push_back({"contrast1.locv.next(s3;)", "c1", [] {
                   Instance i = Fam(Family::kContrast1);
                   return i.college_id(Next(i, Strategy::kLocv, 2, {false, false, false}));
                 }});
  out.push_back({"contrast1.loicv.next(s3;c1)", "c3", [] {
                   Instance i = Fam(Family::kContrast1);
                   return i.college_id(Next(i, Strategy::kLoicv, 2, {true, false, false}));
                 }});

  // Second instance.
  out.push_back({"contrast2.locv.pros", "1",
                 [] { return Pros(Fam(Family::kContrast2), Strategy::kLocv); }});
  for (Strategy s : others) {
    std::string n = StrategyName(s);
    out.push_back({"contrast2." + n + ".matching", "{c1:s2, c2:s1, c3:s3}",
                   [s] { return Matched(Fam(Family::kContrast2), s); }});
    out.push_back({"contrast2." + n + ".pros", "3/4", [s] { return Pros(Fam(Family::kContrast2), s); }});
  }
  out.push_back({"contrast2.pros{c1:s1,c2:s2,c3:s3}", "1", [] {
                   return ProsOf(Fam(Family::kContrast2), R"({"c1":["s1"],"c2":["s2"],"c3":["s3"]})");
                 }});
  out.push_back({"contrast2.pros{c1:s2,c2:s1,c3:s3}", "3/4", [] {
                   return ProsOf(Fam(Family::kContrast2), R"({"c1":["s2"],"c2":["s1"],"c3":["s3"]})");
                 }});

  // Third instance.
  out.push_back({"contrast3.s3.weak(c3,c1)", "7/12", [] {
                   return PrPrefers(Fam(Family::kContrast3), 2, 2, 0, false).value.ToString();
                 }});
  out.push_back({"contrast3.s3.weak(c3,c2)", "3/5", [] {
                   return PrPrefers(Fam(Family::kContrast3), 2, 2, 1, false).value.ToString();
                 }});
  out.push_back({"contrast3.s3.top(c3)", "11/60", [] {
                   std::vector<int> pool{0, 1, 2};
                   return PrTop(Fam(Family::kContrast3), 2, 2, pool).value.ToString();
                 }});
  out.push_back({"contrast3.herf.next(s3;)", "c1", [] {
                   Instance i = Fam(Family::kContrast3);
                   return i.college_id(Next(i, Strategy::kHerf, 2, {false, false, false}));
                 }});
  for (Strategy s : {Strategy::kLocv, Strategy::kHerf}) {
    out.push_back({std::string("contrast3.") + StrategyName(s) + ".pros", "8/17",
                   [s] { return Pros(Fam(Family::kContrast3), s); }});
  }
  for (Strategy s : {Strategy::kLoicv, Strategy::kHeuf}) {
    out.push_back({std::string("contrast3.") + StrategyName(s) + ".pros", "9/17",
                   [s] { return Pros(Fam(Family::kContrast3), s); }});
  }

  for (Family f : {Family::kContrast1, Family::kContrast2, Family::kContrast3}) {
    for (Strategy s : kAllStrategies) {
      out.push_back({std::string(FamilyName(f)) + "." + StrategyName(s) + ".ic-c.violations", "0",
                     [f, s] { return Violations(Fam(f), s, IcLevel::kCertain); }});
    }
  }
}

void AddFamilies(std::vector<Golden>& out) {
  const FamilyParams zr = DefaultParams(Family::kZeroRatio);
  const Rational d = zr.delta;
  const Rational e = zr.epsilon;
  for (Strategy s : {Strategy::kHeuf, Strategy::kLocv, Strategy::kLoicv}) {
    std::string n = StrategyName(s);
    out.push_back({"zero-ratio." + n + ".matching", "{c1:s3, c2:s2, c3:s1}",
                   [s] { return Matched(Fam(Family::kZeroRatio), s); }});
    out.push_back({"zero-ratio." + n + ".pros", ToString(e * (d + 2 * e) / ((d + e) * (d + 3 * e))),
                   [s] { return Pros(Fam(Family::kZeroRatio), s); }});
    out.push_back({"zero-ratio." + n + ".ratio", ToString(2 * e / (d + e)),
                   [s] { return ApproxRatio(Fam(Family::kZeroRatio), s).ratio.ToString(); }});
  }
  out.push_back({"zero-ratio.optimal", ToString((d + 2 * e) / (2 * d + 6 * e)),
                 [] { return OptimalPros(Fam(Family::kZeroRatio)).best_pros.value.ToString(); }});
  out.push_back({"zero-ratio.optimal.matching", "{c1:s2, c2:s3, c3:s1}", [] {
                   Instance i = Fam(Family::kZeroRatio);
                   return FormatMatching(i, OptimalPros(i).best_matching);
                 }});

  const FamilyParams ht = DefaultParams(Family::kHerfTight);
  const Rational n(ht.n);
  const Rational end = 1 / n + ht.epsilon / (n * ht.delta);
  const Rational middle = 1 / n + 2 * ht.epsilon / (n * ht.delta);
  Rational herf = end * end;
  for (int i = 2; i < ht.n; ++i) herf *= middle;
  out.push_back({"herf-tight.herf.matching", "{c1:s1, c2:s2, c3:s3}",
                 [] { return Matched(Fam(Family::kHerfTight), Strategy::kHerf); }});
  out.push_back({"herf-tight.herf.pros", ToString(herf),
                 [] { return Pros(Fam(Family::kHerfTight), Strategy::kHerf); }});
  out.push_back({"herf-tight.optimal", "1",
                 [] { return OptimalPros(Fam(Family::kHerfTight)).best_pros.value.ToString(); }});
  out.push_back({"herf-tight.pros{c1:s2,c2:s3,c3:s1}", "1", [] {
                   return ProsOf(Fam(Family::kHerfTight), R"({"c1":["s2"],"c2":["s3"],"c3":["s1"]})");
                 }});

  const FamilyParams gr = DefaultParams(Family::kGoldenRatio);
  out.push_back({"golden-ratio.pros(a)", ToString(gr.z), [] {
                   return ProsOf(Fam(Family::kGoldenRatio), R"({"c1":["s1"],"c2":["s2"],"c3":["s3"]})");
                 }});
  out.push_back({"golden-ratio.pros(b)", ToString(gr.y), [] {
                   return ProsOf(Fam(Family::kGoldenRatio), R"({"c1":["s2"],"c2":["s1"],"c3":["s3"]})");
                 }});
  out.push_back({"golden-ratio.pros(c)", ToString((1 - gr.z) * (1 - gr.y)), [] {
                   return ProsOf(Fam(Family::kGoldenRatio), R"({"c1":["s2"],"c2":["s3"],"c3":["s1"]})");
                 }});
  out.push_back({"golden-ratio.positive_matchings", "3", [] {
                   Instance i = Fam(Family::kGoldenRatio);
                   int count = 0;
                   ForEachMatching(i, [&](const Matching& m) {
                     if (ProsExact2F(i, m).value > Number(0)) ++count;
                     return true;
                   });
                   return std::to_string(count);
                 }});

  out.push_back({"icr-conflict.loicv.ic-r.violations", "0",
                 [] { return Violations(Fam(Family::kIcrConflict), Strategy::kLoicv, IcLevel::kRatio); }});

  const Rational ne = DefaultParams(Family::kNonTransitive).epsilon;
  const Rational half(1, 2);
  out.push_back({"non-transitive.u(f1,c1)", "13/20",
                 [] { return ToString(Fam(Family::kNonTransitive).utility(0, 0, 0)); }});
  out.push_back({"non-transitive.u(f2,c2)", "1/20",
                 [] { return ToString(Fam(Family::kNonTransitive).utility(0, 1, 1)); }});
  out.push_back({"non-transitive.u(f3,c3)", "7/10",
                 [] { return ToString(Fam(Family::kNonTransitive).utility(0, 2, 2)); }});
  const int pairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
  const Rational expected[3] = {half + ne, half + ne, 4 * ne};
  for (int k = 0; k < 3; ++k) {
    int a = pairs[k][0], b = pairs[k][1];
    out.push_back({"non-transitive.strict(c" + std::to_string(a + 1) + ",c" + std::to_string(b + 1) + ")",
                   ToString(expected[k]),
                   [a, b] { return PrPrefers(Fam(Family::kNonTransitive), 0, a, b, true).value.ToString(); }});
  }
  out.push_back({"non-transitive.violating_triple", "(c1, c2, c3)", [] {
                   auto t = CheckTransitivity(Fam(Family::kNonTransitive), 0);
                   if (!t) return std::string("none");
                   return "(c" + std::to_string((*t)[0] + 1) + ", c" + std::to_string((*t)[1] + 1) +
                          ", c" + std::to_string((*t)[2] + 1) + ")";
                 }});
}

}  // namespace

std::vector<Golden> AllGoldens() {
  std::vector<Golden> out;
  AddContrast(out);
  AddFamilies(out);
  return out;
}

bool GoldenMatches(const std::string& expected, const std::string& actual) {
  try {
    return ParseRational(expected) == ParseRational(actual);
  } catch (const std::invalid_argument&) {
    return expected == actual;
  }
}

std::vector<GoldenResult> RunGoldens(const std::map<std::string, std::string>& overrides) {
  std::vector<Golden> goldens = AllGoldens();
  for (const auto& [name, value] : overrides) {
    bool known = false;
    for (const Golden& g : goldens) known = known || g.name == name;
    if (!known) throw std::invalid_argument("no golden named " + name);
  }
  std::vector<GoldenResult> results;
  for (const Golden& g : goldens) {
    GoldenResult r;
    r.name = g.name;
    auto it = overrides.find(g.name);
    r.expected = it == overrides.end() ? g.expected : it->second;
    try {
      r.actual = g.compute();
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    r.pass = GoldenMatches(r.expected, r.actual);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace schoolchoice::cli
