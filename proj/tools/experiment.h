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

// Approximation-ratio experiment over random instances: per-trial CSV rows
// and grouped box plots.

#ifndef SCHOOLCHOICE_TOOLS_EXPERIMENT_H_
#define SCHOOLCHOICE_TOOLS_EXPERIMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "schoolchoice/gda.h"
#include "schoolchoice/instances.h"
#include "schoolchoice/oracle.h"
#include "schoolchoice/rational.h"

namespace schoolchoice::cli {

struct ExperimentConfig {
  int trials = 500;
  std::vector<int> n_values = {3, 4};
  std::vector<int> m_values;  // empty: m = n
  std::vector<CapacityRule> rules = {CapacityRule::kOnes, CapacityRule::kTightSeats};
  std::vector<Strategy> strategies = {std::begin(kAllStrategies), std::end(kAllStrategies)};
  int num_features = 2;
  DistSpec dist;
  std::uint64_t seed = 42;
  std::uint64_t budget = kDefaultEnumerationBudget;
  int threads = 1;
};

// One size and capacity layout; trial i uses SizeConfigs()[i % size].
struct SizeConfig {
  int n = 0;
  int m = 0;
  CapacityRule rule = CapacityRule::kOnes;
  std::string Label() const;
};

// Every (n, m, rule) combination, dropping invalid ones (tight with m > n)
// and tight layouts identical to all-ones (m == n).
std::vector<SizeConfig> SizeConfigs(const ExperimentConfig& config);

struct ExperimentRow {
  int trial = 0;
  std::uint64_t seed = 0;
  SizeConfig size;
  Strategy strategy = Strategy::kHeuf;
  Number algorithm_pros;
  Number optimal_pros;
  Number ratio;
};

std::uint64_t TrialSeed(std::uint64_t master, int trial);

// Rows ordered by trial, then by the configured strategy order. Results do
// not depend on `threads`. Throws BudgetExceeded before any work when some
// size exceeds the enumeration budget, std::invalid_argument for an empty
// configuration.
std::vector<ExperimentRow> RunExperiment(const ExperimentConfig& config);

std::string RowsToCsv(const std::vector<ExperimentRow>& rows);
std::string RowsToSvg(const std::vector<ExperimentRow>& rows, const ExperimentConfig& config);

}  // namespace schoolchoice::cli

#endif  // SCHOOLCHOICE_TOOLS_EXPERIMENT_H_
