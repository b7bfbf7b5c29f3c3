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

#include "experiment.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "boxplot.h"
#include "schoolchoice/sampling.h"

namespace schoolchoice::cli {
namespace {

std::string Decimal12(const Number& v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v.ToDouble());
  return buf;
}

std::string ExactOrEmpty(const Number& v) { return v.is_exact() ? v.ToString() : ""; }

std::uint64_t SpaceSize(int n, int m, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / static_cast<std::uint64_t>(m + 1)) return cap + 1;
    total *= static_cast<std::uint64_t>(m + 1);
  }
  return total;
}

}  // namespace

std::string SizeConfig::Label() const {
  return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " " + CapacityRuleName(rule);
}

std::vector<SizeConfig> SizeConfigs(const ExperimentConfig& config) {
  std::vector<SizeConfig> out;
  for (int n : config.n_values) {
    std::vector<int> ms = config.m_values.empty() ? std::vector<int>{n} : config.m_values;
    for (int m : ms) {
      for (CapacityRule rule : config.rules) {
        if (rule == CapacityRule::kTightSeats) {
          if (m > n) continue;
          if (m == n && std::find(config.rules.begin(), config.rules.end(),
                                  CapacityRule::kOnes) != config.rules.end()) {
            continue;
          }
        }
        out.push_back({n, m, rule});
      }
    }
  }
  return out;
}

std::uint64_t TrialSeed(std::uint64_t master, int trial) {
  return SplitMix64(SplitMix64(master) ^ static_cast<std::uint64_t>(trial));
}

std::vector<ExperimentRow> RunExperiment(const ExperimentConfig& config) {
  const std::vector<SizeConfig> sizes = SizeConfigs(config);
  if (sizes.empty()) throw std::invalid_argument("no valid instance size in the configuration");
  if (config.strategies.empty()) throw std::invalid_argument("no strategy selected");
  if (config.trials < 0) throw std::invalid_argument("trials must be non-negative");
  for (const SizeConfig& s : sizes) {
    if (s.n < 1 || s.m < 1) throw std::invalid_argument("sizes must be positive");
    if (SpaceSize(s.n, s.m, config.budget) > config.budget) {
      throw BudgetExceeded("matching space for " + s.Label() + " exceeds the budget of " +
                           std::to_string(config.budget));
    }
  }

  const std::size_t per_trial = config.strategies.size();
  std::vector<ExperimentRow> rows(static_cast<std::size_t>(config.trials) * per_trial);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (true) {
      const int trial = next.fetch_add(1);
      if (trial >= config.trials) return;
      try {
        const SizeConfig& size = sizes[static_cast<std::size_t>(trial) % sizes.size()];
        RandomSpec spec;
        spec.n = size.n;
        spec.m = size.m;
        spec.capacities = Capacities(size.rule, size.n, size.m);
        spec.num_features = config.num_features;
        spec.dist = config.dist;
        spec.seed = TrialSeed(config.seed, trial);
        Instance inst = GenRandom(spec);
        OptResult opt = OptimalPros(inst, config.budget);
        for (std::size_t k = 0; k < per_trial; ++k) {
          RatioResult r = ApproxRatio(inst, config.strategies[k], opt);
          ExperimentRow& row = rows[static_cast<std::size_t>(trial) * per_trial + k];
          row.trial = trial;
          row.seed = spec.seed;
          row.size = size;
          row.strategy = config.strategies[k];
          row.algorithm_pros = r.pros.value;
          row.optimal_pros = opt.best_pros.value;
          row.ratio = r.ratio;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(config.trials);
        return;
      }
    }
  };

  const int threads = std::max(1, config.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string RowsToCsv(const std::vector<ExperimentRow>& rows) {
  std::string out =
      "trial,seed,n,m,capacity_rule,strategy,algorithm_pros,optimal_pros,ratio,"
      "algorithm_pros_exact,optimal_pros_exact,ratio_exact\n";
  for (const ExperimentRow& r : rows) {
    out += std::to_string(r.trial) + "," + std::to_string(r.seed) + "," + std::to_string(r.size.n) +
           "," + std::to_string(r.size.m) + "," + CapacityRuleName(r.size.rule) + "," +
           StrategyName(r.strategy) + "," + Decimal12(r.algorithm_pros) + "," +
           Decimal12(r.optimal_pros) + "," + Decimal12(r.ratio) + "," +
           ExactOrEmpty(r.algorithm_pros) + "," + ExactOrEmpty(r.optimal_pros) + "," +
           ExactOrEmpty(r.ratio) + "\n";
  }
  return out;
}

std::string RowsToSvg(const std::vector<ExperimentRow>& rows, const ExperimentConfig& config) {
  BoxPlotData data;
  data.title = "Approximation ratio by instance size";
  data.y_label = "ProS(algorithm) / ProS(optimal)";
  const std::vector<SizeConfig> sizes = SizeConfigs(config);
  for (const SizeConfig& s : sizes) data.groups.push_back(s.Label());
  for (Strategy s : config.strategies) data.series.push_back(StrategyName(s));
  data.values.assign(sizes.size(), std::vector<std::vector<double>>(config.strategies.size()));
  const std::size_t per_trial = config.strategies.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t g = static_cast<std::size_t>(rows[i].trial) % sizes.size();
    data.values[g][i % per_trial].push_back(rows[i].ratio.ToDouble());
  }
  return RenderBoxPlotSvg(data);
}

}  // namespace schoolchoice::cli
