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

#include <algorithm>
#include <cctype>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace schoolchoice {
namespace {

ComparisonVector VectorFromRow(const std::vector<Number>& row, int c,
                               const std::vector<int>& pool) {
  ComparisonVector v;
  for (int other : pool) {
    if (other != c) v.probs.push_back(row[other]);
  }
  std::sort(v.probs.begin(), v.probs.end());
  return v;
}

// Lexicographic maximum over `pool`; the first (lowest index) wins ties.
int BestByVector(const std::vector<std::vector<Number>>& weak,
                 const std::vector<int>& pool) {
  int best = -1;
  ComparisonVector best_vector;
  for (int c : pool) {
    ComparisonVector v = VectorFromRow(weak[c], c, pool);
    if (best < 0 || CompareLex(v, best_vector) > 0) {
      best = c;
      best_vector = std::move(v);
    }
  }
  return best;
}

}  // namespace

const char* StrategyName(Strategy strategy) {
  switch (strategy) {
    case Strategy::kHeuf:
      return "heuf";
    case Strategy::kLocv:
      return "locv";
    case Strategy::kLoicv:
      return "loicv";
    case Strategy::kHerf:
      return "herf";
  }
  return "unknown";
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  std::string lower(name);
  for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (Strategy s : kAllStrategies) {
    if (lower == StrategyName(s)) return s;
  }
  return std::nullopt;
}

int CompareLex(const ComparisonVector& a, const ComparisonVector& b) {
  const std::size_t n = std::min(a.probs.size(), b.probs.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = Compare(a.probs[i], b.probs[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.probs.size() == b.probs.size()) return 0;
  return a.probs.size() < b.probs.size() ? -1 : 1;
}

ComparisonVector ComparisonVectorOf(const Instance& inst, int s, int c,
                                    std::span<const int> pool,
                                    const MonteCarloOptions& mc) {
  if (std::find(pool.begin(), pool.end(), c) == pool.end()) {
    throw std::invalid_argument("college is not in the pool");
  }
  ComparisonVector v;
  for (int other : pool) {
    if (other != c) v.probs.push_back(PrPrefers(inst, s, c, other, false, mc).value);
  }
  std::sort(v.probs.begin(), v.probs.end());
  return v;
}

// ---------------------------------------------------------------------------

ProposalPolicy::ProposalPolicy(const Instance& inst, int s, Strategy strategy,
                               const MonteCarloOptions& mc)
    : inst_(&inst), student_(s), strategy_(strategy), mc_(mc) {
  const int m = inst.num_colleges();
  if (s < 0 || s >= inst.num_students()) {
    throw std::invalid_argument("student index out of range");
  }
  if (strategy == Strategy::kHeuf) {
    std::vector<Number> eu;
    for (int c = 0; c < m; ++c) eu.push_back(ExpectedUtility(inst, s, c));
    fixed_order_.resize(m);
    std::iota(fixed_order_.begin(), fixed_order_.end(), 0);
    std::stable_sort(fixed_order_.begin(), fixed_order_.end(),
                     [&](int a, int b) { return eu[a] > eu[b]; });
    return;
  }
  if (strategy == Strategy::kLocv || strategy == Strategy::kLoicv) {
    weak_.assign(m, std::vector<Number>(m, Number(1)));
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a != b) weak_[a][b] = PrPrefers(inst, s, a, b, false, mc).value;
      }
    }
  }
  if (strategy == Strategy::kLocv) {
    // Repeatedly take the lexicographic maximum over all colleges; the
    // vectors never change, so this is a sort with lowest-index tie-breaks.
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    std::vector<ComparisonVector> vectors;
    for (int c = 0; c < m; ++c) vectors.push_back(VectorFromRow(weak_[c], c, all));
    fixed_order_ = all;
    std::stable_sort(fixed_order_.begin(), fixed_order_.end(), [&](int a, int b) {
      return CompareLex(vectors[a], vectors[b]) > 0;
    });
  }
}

int ProposalPolicy::Choose(const std::vector<bool>& rejected) const {
  if (!fixed_order_.empty()) {
    for (int c : fixed_order_) {
      if (!rejected[c]) return c;
    }
    throw std::invalid_argument("every college has rejected the student");
  }
  std::vector<int> pool;
  for (int c = 0; c < inst_->num_colleges(); ++c) {
    if (!rejected[c]) pool.push_back(c);
  }
  if (pool.empty()) throw std::invalid_argument("every college has rejected the student");
  if (strategy_ == Strategy::kLoicv) return BestByVector(weak_, pool);
  int best = -1;
  Number best_value;
  for (int c : pool) {
    Number p = PrTop(*inst_, student_, c, pool, mc_).value;
    if (best < 0 || p > best_value) {
      best = c;
      best_value = p;
    }
  }
  return best;
}

int ProposalPolicy::Next(const std::vector<bool>& rejected) {
  const int m = inst_->num_colleges();
  if (static_cast<int>(rejected.size()) != m) {
    throw std::invalid_argument("rejected set has the wrong size");
  }
  if (!fixed_order_.empty() || m > 64) return Choose(rejected);
  std::uint64_t mask = 0;
  for (int c = 0; c < m; ++c) {
    if (rejected[c]) mask |= std::uint64_t{1} << c;
  }
  auto it = memo_.find(mask);
  if (it != memo_.end()) return it->second;
  int choice = Choose(rejected);
  memo_.emplace(mask, choice);
  return choice;
}

int Next(const Instance& inst, Strategy strategy, int s,
         const std::vector<bool>& rejected, const MonteCarloOptions& mc) {
  ProposalPolicy policy(inst, s, strategy, mc);
  return policy.Next(rejected);
}

// ---------------------------------------------------------------------------

GdaResult RunGda(const Instance& inst, std::vector<ProposalPolicy*> policies,
                 bool keep_trace) {
  const int n = inst.num_students();
  const int m = inst.num_colleges();
  if (static_cast<int>(policies.size()) != n) {
    throw std::invalid_argument("need one proposal policy per student");
  }
  std::vector<int> assignment(n, kUnmatched);
  std::vector<std::vector<bool>> rejected(n, std::vector<bool>(m, false));
  std::vector<int> rejection_count(n, 0);
  std::vector<std::vector<int>> held(m);
  std::vector<std::vector<int>> proposers(m);
  GdaTrace trace;

  while (true) {
    GdaRound round;
    bool any = false;
    for (auto& p : proposers) p.clear();
    for (int s = 0; s < n; ++s) {
      if (assignment[s] != kUnmatched || rejection_count[s] == m) continue;
      int c = policies[s]->Next(rejected[s]);
      proposers[c].push_back(s);
      any = true;
      if (keep_trace) round.proposals.emplace_back(s, c);
    }
    if (!any) break;
    for (int c = 0; c < m; ++c) {
      if (proposers[c].empty()) continue;
      std::vector<int> pool = held[c];
      pool.insert(pool.end(), proposers[c].begin(), proposers[c].end());
      std::sort(pool.begin(), pool.end(), [&](int a, int b) {
        return inst.CollegePrefers(c, a, b);
      });
      const std::size_t keep = std::min<std::size_t>(pool.size(), inst.capacity(c));
      for (std::size_t i = keep; i < pool.size(); ++i) {
        int s = pool[i];
        assignment[s] = kUnmatched;
        rejected[s][c] = true;
        ++rejection_count[s];
        if (keep_trace) round.rejections.emplace_back(c, s);
      }
      pool.resize(keep);
      for (int s : pool) assignment[s] = c;
      std::sort(pool.begin(), pool.end());
      held[c] = std::move(pool);
    }
    if (keep_trace) trace.rounds.push_back(std::move(round));
  }
  Matching matching(assignment, m);
  trace.final = matching;
  return {std::move(matching), std::move(trace)};
}

GdaResult RunGda(const Instance& inst, Strategy strategy, const MonteCarloOptions& mc) {
  std::vector<std::unique_ptr<ProposalPolicy>> owned;
  std::vector<ProposalPolicy*> policies;
  for (int s = 0; s < inst.num_students(); ++s) {
    owned.push_back(std::make_unique<ProposalPolicy>(inst, s, strategy, mc));
    policies.push_back(owned.back().get());
  }
  return RunGda(inst, policies);
}

}  // namespace schoolchoice
