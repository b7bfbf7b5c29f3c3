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

// Round-based student-proposing deferred acceptance with pluggable proposal
// strategies.
//
// Each round, every unmatched student who still has a college left proposes
// to Next(R_s), where R_s is the (cumulative) set of colleges that rejected
// that student. Each college keeps its x_c favourite students among those it holds
// and its new proposers. Ties inside a strategy go to the lowest college
// index.

#ifndef SCHOOLCHOICE_GDA_H_
#define SCHOOLCHOICE_GDA_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schoolchoice/model.h"
#include "schoolchoice/prob.h"

namespace schoolchoice {

enum class Strategy {
  kHeuf,   // highest expected utility first
  kLocv,   // fixed lexicographic order of comparison vectors over all colleges
  kLoicv,  // comparison vectors recomputed over the colleges not yet rejecting
  kHerf,   // highest probability of being ranked first among those left
};

inline constexpr Strategy kAllStrategies[] = {Strategy::kHeuf, Strategy::kLocv,
                                              Strategy::kLoicv, Strategy::kHerf};

// "heuf", "locv", "loicv", "herf".
const char* StrategyName(Strategy strategy);
// Case-insensitive inverse of StrategyName.
std::optional<Strategy> ParseStrategy(std::string_view name);

// Ascending weak win probabilities of one college against a pool of rivals.
struct ComparisonVector {
  std::vector<Number> probs;
};

// -1, 0 or 1 as a is lexicographically smaller than, equal to or larger than
// b. A strict prefix is smaller.
int CompareLex(const ComparisonVector& a, const ComparisonVector& b);

// Throws std::invalid_argument when c is not in the pool.
ComparisonVector ComparisonVectorOf(const Instance& inst, int s, int c,
                                    std::span<const int> pool,
                                    const MonteCarloOptions& mc = {});

// One student's proposal rule. All pairwise quantities are computed up
// front; answers for each rejected set are memoized. Keeps a pointer to
// `inst`, which must outlive the policy.
class ProposalPolicy {
 public:
  ProposalPolicy(const Instance& inst, int s, Strategy strategy,
                 const MonteCarloOptions& mc = {});

  // The college to propose to next. `rejected` has one entry per college.
  // Throws std::invalid_argument when every college is rejected.
  int Next(const std::vector<bool>& rejected);

 private:
  int Choose(const std::vector<bool>& rejected) const;

  const Instance* inst_;
  int student_;
  Strategy strategy_;
  MonteCarloOptions mc_;
  std::vector<int> fixed_order_;           // HEUF and LOCV
  std::vector<std::vector<Number>> weak_;  // weak_[a][b] = Pr[a >= b]
  std::unordered_map<std::uint64_t, int> memo_;
};

int Next(const Instance& inst, Strategy strategy, int s,
         const std::vector<bool>& rejected, const MonteCarloOptions& mc = {});

struct GdaRound {
  std::vector<std::pair<int, int>> proposals;   // (student, college)
  std::vector<std::pair<int, int>> rejections;  // (college, student)
};

struct GdaTrace {
  std::vector<GdaRound> rounds;
  Matching final;
};

struct GdaResult {
  Matching matching;
  GdaTrace trace;
};

// Policies must be one per student, built on `inst`.
GdaResult RunGda(const Instance& inst, std::vector<ProposalPolicy*> policies,
                 bool keep_trace = true);

GdaResult RunGda(const Instance& inst, Strategy strategy,
                 const MonteCarloOptions& mc = {});

}  // namespace schoolchoice

#endif  // SCHOOLCHOICE_GDA_H_
