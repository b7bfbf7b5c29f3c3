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

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>

namespace schoolchoice {
namespace {

bool Visit(const Instance& inst, int s, std::vector<int>& assignment,
           std::vector<int>& load, const std::function<bool(const Matching&)>& visit) {
  if (s == inst.num_students()) {
    return visit(Matching(assignment, inst.num_colleges()));
  }
  assignment[s] = kUnmatched;
  if (!Visit(inst, s + 1, assignment, load, visit)) return false;
  for (int c = 0; c < inst.num_colleges(); ++c) {
    if (load[c] == inst.capacity(c)) continue;
    assignment[s] = c;
    ++load[c];
    bool more = Visit(inst, s + 1, assignment, load, visit);
    --load[c];
    if (!more) return false;
  }
  assignment[s] = kUnmatched;
  return true;
}

std::uint64_t Factorial(int m, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 2; i <= m; ++i) {
    if (out > cap / static_cast<std::uint64_t>(i)) return cap + 1;
    out *= static_cast<std::uint64_t>(i);
  }
  return out;
}

}  // namespace

std::uint64_t AssignmentSpaceSize(const Instance& inst) {
  const std::uint64_t base = static_cast<std::uint64_t>(inst.num_colleges()) + 1;
  std::uint64_t total = 1;
  for (int s = 0; s < inst.num_students(); ++s) {
    if (total > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= base;
  }
  return total;
}

void ForEachMatching(const Instance& inst,
                     const std::function<bool(const Matching&)>& visit,
                     std::uint64_t budget) {
  std::uint64_t size = AssignmentSpaceSize(inst);
  if (size > budget) {
    throw BudgetExceeded("enumeration space " + std::to_string(size) +
                         " exceeds budget " + std::to_string(budget));
  }
  std::vector<int> assignment(inst.num_students(), kUnmatched);
  std::vector<int> load(inst.num_colleges(), 0);
  Visit(inst, 0, assignment, load, visit);
}

std::vector<Matching> EnumerateMatchings(const Instance& inst, std::uint64_t budget) {
  std::vector<Matching> out;
  ForEachMatching(
      inst,
      [&](const Matching& m) {
        out.push_back(m);
        return true;
      },
      budget);
  return out;
}

OptResult OptimalPros(const Instance& inst, std::uint64_t budget) {
  if (!HasExactPros(inst)) {
    throw std::invalid_argument(
        "no exact stability evaluator for this instance (needs two features "
        "or finite-support weights)");
  }
  OptResult best;
  bool first = true;
  ForEachMatching(
      inst,
      [&](const Matching& m) {
        ++best.matchings_examined;
        ProsResult p = EvaluatePros(inst, m);
        if (first || p.value > best.best_pros.value) {
          best.best_matching = m;
          best.best_pros = std::move(p);
          first = false;
        }
        return true;
      },
      budget);
  return best;
}

RatioResult ApproxRatio(const Instance& inst, Strategy strategy,
                        const OptResult& optimal) {
  RatioResult out;
  out.optimal = optimal;
  out.matching = RunGda(inst, strategy).matching;
  out.pros = EvaluatePros(inst, out.matching);
  if (optimal.best_pros.value == Number(0)) {
    out.ratio = Number(1);
  } else {
    out.ratio = out.pros.value / optimal.best_pros.value;
  }
  return out;
}

RatioResult ApproxRatio(const Instance& inst, Strategy strategy, std::uint64_t budget) {
  return ApproxRatio(inst, strategy, OptimalPros(inst, budget));
}

// ---------------------------------------------------------------------------

const char* IcLevelName(IcLevel level) {
  return level == IcLevel::kCertain ? "ic-c" : "ic-r";
}

std::string Misreport::Describe(const Instance& inst) const {
  if (order.empty()) return "truthful";
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += ">";
    out += inst.college_id(order[i]);
  }
  return out;
}

std::vector<Misreport> DeterministicMisreports(int num_colleges, std::uint64_t budget) {
  std::uint64_t count = Factorial(num_colleges, budget);
  if (count + 1 > budget) {
    throw BudgetExceeded("misreport space exceeds budget " + std::to_string(budget));
  }
  std::vector<Misreport> out;
  out.push_back(Misreport{});
  std::vector<int> order(num_colleges);
  std::iota(order.begin(), order.end(), 0);
  do {
    out.push_back(Misreport{order});
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Instance ApplyMisreport(const Instance& inst, int s, const Misreport& report) {
  if (report.order.empty()) return inst;
  const int m = inst.num_colleges();
  std::vector<Rational> column(m);
  for (int rank = 0; rank < m; ++rank) {
    column[report.order[rank]] = Fraction(m - rank, m);
  }
  std::vector<std::vector<Rational>> utilities(inst.num_features(), column);
  return inst.WithStudentReport(s, std::move(utilities), UniformSimplex{});
}

Probability ImprovementProbability(const Instance& inst, int s, int before,
                                   int after, const MonteCarloOptions& mc) {
  Probability out;
  if (after == kUnmatched || after == before) {
    out.value = Number(0);
  } else if (before == kUnmatched) {
    out.value = Number(1);
  } else {
    out = PrPrefers(inst, s, after, before, true, mc);
  }
  return out;
}

std::vector<MisreportOutcome> ExploreMisreports(const Instance& inst, Strategy strategy,
                                                const std::vector<Misreport>& space,
                                                const MonteCarloOptions& mc) {
  const int n = inst.num_students();
  std::vector<std::unique_ptr<ProposalPolicy>> truthful;
  std::vector<ProposalPolicy*> policies;
  for (int s = 0; s < n; ++s) {
    truthful.push_back(std::make_unique<ProposalPolicy>(inst, s, strategy, mc));
    policies.push_back(truthful.back().get());
  }
  const Matching honest = RunGda(inst, policies, false).matching;

  std::vector<MisreportOutcome> out;
  for (int s = 0; s < n; ++s) {
    for (const Misreport& report : space) {
      MisreportOutcome outcome;
      outcome.student = s;
      outcome.misreport = report.Describe(inst);
      outcome.truthful_college = honest.college_of(s);
      if (report.order.empty()) {
        outcome.misreport_college = honest.college_of(s);
      } else {
        // Only s's own proposal rule changes; everyone else keeps theirs.
        Instance lie = ApplyMisreport(inst, s, report);
        ProposalPolicy liar(lie, s, strategy, mc);
        std::vector<ProposalPolicy*> mixed = policies;
        mixed[s] = &liar;
        outcome.misreport_college = RunGda(inst, mixed, false).matching.college_of(s);
      }
      outcome.improvement = ImprovementProbability(
          inst, s, outcome.truthful_college, outcome.misreport_college, mc);
      out.push_back(std::move(outcome));
    }
  }
  return out;
}

bool IsViolation(IcLevel level, const Probability& improvement) {
  if (level == IcLevel::kCertain) return improvement.value == Number(1);
  return improvement.value > Number(Rational(1, 2));
}

IcAuditReport AuditIc(const Instance& inst, Strategy strategy, IcLevel level,
                      const std::vector<Misreport>& space,
                      const MonteCarloOptions& mc) {
  IcAuditReport report;
  report.level = level;
  for (auto& outcome : ExploreMisreports(inst, strategy, space, mc)) {
    ++report.misreports_tried;
    if (IsViolation(level, outcome.improvement)) {
      report.violations.push_back(std::move(outcome));
    }
  }
  return report;
}

IcAuditReport AuditIc(const Instance& inst, Strategy strategy, IcLevel level,
                      std::uint64_t budget, const MonteCarloOptions& mc) {
  return AuditIc(inst, strategy, level,
                 DeterministicMisreports(inst.num_colleges(), budget), mc);
}

std::optional<std::array<int, 3>> CheckTransitivity(const Instance& inst, int s,
                                                    const MonteCarloOptions& mc) {
  const int m = inst.num_colleges();
  if (m < 3) return std::nullopt;
  std::vector<std::vector<bool>> half(m, std::vector<bool>(m, true));
  const Number one_half(Rational(1, 2));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) half[a][b] = PrPrefers(inst, s, a, b, false, mc).value >= one_half;
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j == i || !half[i][j]) continue;
      for (int k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        if (half[j][k] && !half[i][k]) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

}  // namespace schoolchoice
