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

// Exhaustive ground truth for small instances: every feasible matching, the
// best probability of stability, approximation ratios of the strategies, and
// manipulation audits over a finite space of misreports.

#ifndef SCHOOLCHOICE_ORACLE_H_
#define SCHOOLCHOICE_ORACLE_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schoolchoice/gda.h"
#include "schoolchoice/model.h"
#include "schoolchoice/prob.h"

namespace schoolchoice {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultMisreportBudget = 100'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// prod_s (m + 1), saturating at UINT64_MAX.
std::uint64_t AssignmentSpaceSize(const Instance& inst);

// Calls `visit` on every capacity-feasible matching, unmatched options
// included, each exactly once. Students are assigned in index order, each
// trying unmatched, then c_1..c_m. Stops early when `visit` returns false.
// Throws BudgetExceeded when AssignmentSpaceSize exceeds `budget`.
void ForEachMatching(const Instance& inst,
                     const std::function<bool(const Matching&)>& visit,
                     std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<Matching> EnumerateMatchings(
    const Instance& inst, std::uint64_t budget = kDefaultEnumerationBudget);

struct OptResult {
  Matching best_matching;
  ProsResult best_pros;
  std::uint64_t matchings_examined = 0;
};

// Exhaustive maximum of the exact probability of stability; the first
// enumerated matching wins ties. Throws std::invalid_argument when no exact
// evaluator applies, BudgetExceeded when the space is too large.
OptResult OptimalPros(const Instance& inst,
                      std::uint64_t budget = kDefaultEnumerationBudget);

struct RatioResult {
  Matching matching;    // the strategy's output
  ProsResult pros;      // its probability of stability
  OptResult optimal;
  Number ratio;         // pros / optimal; 1 when the optimum is 0
};

RatioResult ApproxRatio(const Instance& inst, Strategy strategy,
                        std::uint64_t budget = kDefaultEnumerationBudget);
// Reuses a precomputed optimum.
RatioResult ApproxRatio(const Instance& inst, Strategy strategy,
                        const OptResult& optimal);

// ---------------------------------------------------------------------------
// Manipulation audits.

enum class IcLevel {
  kCertain,  // a misreport that improves with probability 1
  kRatio,    // a misreport that improves with probability above 1/2
};

const char* IcLevelName(IcLevel level);  // "ic-c", "ic-r"

// A report a student can make. An empty order is the truthful report;
// otherwise the same utility (m - rank + 1) / m on every feature for the
// college at 1-based `rank`, with flat weights.
struct Misreport {
  std::vector<int> order;
  std::string Describe(const Instance& inst) const;
};

// The truthful report followed by all m! strict orders in lexicographic
// order. Throws BudgetExceeded when m! + 1 exceeds `budget`.
std::vector<Misreport> DeterministicMisreports(
    int num_colleges, std::uint64_t budget = kDefaultMisreportBudget);

// s's instance data replaced by the report.
Instance ApplyMisreport(const Instance& inst, int s, const Misreport& report);

// Pr[after > before] under s's true preferences. Ending unmatched is never
// an improvement; moving from unmatched to any college always is.
Probability ImprovementProbability(const Instance& inst, int s, int before,
                                   int after, const MonteCarloOptions& mc = {});

struct MisreportOutcome {
  int student = 0;
  std::string misreport;
  int truthful_college = kUnmatched;
  int misreport_college = kUnmatched;
  Probability improvement;
};

// One outcome per (student, misreport), in student then misreport order.
std::vector<MisreportOutcome> ExploreMisreports(
    const Instance& inst, Strategy strategy,
    const std::vector<Misreport>& space, const MonteCarloOptions& mc = {});

bool IsViolation(IcLevel level, const Probability& improvement);

struct IcAuditReport {
  IcLevel level = IcLevel::kCertain;
  std::vector<MisreportOutcome> violations;
  std::uint64_t misreports_tried = 0;
  // Finding nothing over a finite misreport space is evidence only.
  static constexpr const char* kScopeNote =
      "no violation among the misreports tried; this is not a proof of "
      "incentive compatibility";
};

IcAuditReport AuditIc(const Instance& inst, Strategy strategy, IcLevel level,
                      std::uint64_t budget = kDefaultMisreportBudget,
                      const MonteCarloOptions& mc = {});

// Same audit over an explicit misreport space.
IcAuditReport AuditIc(const Instance& inst, Strategy strategy, IcLevel level,
                      const std::vector<Misreport>& space,
                      const MonteCarloOptions& mc = {});

// First triple (i, j, k), in index order, with Pr[i >= j] >= 1/2,
// Pr[j >= k] >= 1/2 and Pr[i >= k] < 1/2.
std::optional<std::array<int, 3>> CheckTransitivity(
    const Instance& inst, int s, const MonteCarloOptions& mc = {});

}  // namespace schoolchoice

#endif  // SCHOOLCHOICE_ORACLE_H_
