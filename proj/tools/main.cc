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

// schoolchoice: command-line front end.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "experiment.h"
#include "goldens.h"
#include "io.h"
#include "schoolchoice/gda.h"
#include "schoolchoice/instances.h"
#include "schoolchoice/json_io.h"
#include "schoolchoice/oracle.h"
#include "schoolchoice/prob.h"

namespace schoolchoice::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "json";

  MonteCarloOptions mc() const { return {samples, seed}; }
};

void AddSampling(CLI::App* cmd, Common& c) {
  cmd->add_option("--samples", c.samples, "Monte Carlo samples per estimate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Random seed");
}

void AddOut(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Output path (default stdout)");
}

Strategy StrategyArg(const std::string& name) {
  auto s = ParseStrategy(name);
  if (!s) throw InputError("unknown strategy '" + name + "'");
  return *s;
}

std::vector<Strategy> StrategiesArg(const std::vector<std::string>& names) {
  if (names.empty()) return {std::begin(kAllStrategies), std::end(kAllStrategies)};
  std::vector<Strategy> out;
  for (const std::string& n : names) out.push_back(StrategyArg(n));
  return out;
}

Rational RationalArg(const std::string& text, const char* flag) {
  try {
    return ParseRational(text);
  } catch (const std::exception&) {
    throw InputError(std::string(flag) + ": not a number: '" + text + "'");
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

Json BlocksJson(const Instance& inst, const Matching& m, const MonteCarloOptions& mc) {
  Json blocks = Json::object();
  for (int s = 0; s < inst.num_students(); ++s) {
    Json list = Json::array();
    for (const PotentialBlock& b : PotentialBlocks(inst, m, s, mc)) {
      Json entry;
      entry["college"] = inst.college_id(b.college);
      entry["probability"] = ProbabilityJson(b.probability);
      list.push_back(entry);
    }
    blocks[inst.student_id(s)] = list;
  }
  return blocks;
}

Json TraceJson(const Instance& inst, const GdaTrace& trace) {
  Json rounds = Json::array();
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    Json round;
    round["round"] = r + 1;
    Json props = Json::array();
    for (auto [s, c] : trace.rounds[r].proposals) {
      props.push_back({inst.student_id(s), inst.college_id(c)});
    }
    Json rejs = Json::array();
    for (auto [c, s] : trace.rounds[r].rejections) {
      rejs.push_back({inst.college_id(c), inst.student_id(s)});
    }
    round["proposals"] = props;
    round["rejections"] = rejs;
    rounds.push_back(round);
  }
  return rounds;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string strategy;
  bool trace = false;
};

int Solve(const SolveArgs& a, const Common& c) {
  const Instance inst = LoadInstance(a.instance);
  const Strategy strategy = StrategyArg(a.strategy);
  GdaResult run = RunGda(inst, strategy, c.mc());
  Json out;
  out["strategy"] = StrategyName(strategy);
  out["matching"] = MatchingToJson(inst, run.matching);
  out["potential_blocks"] = BlocksJson(inst, run.matching, c.mc());
  out["pros"] = ProbabilityJson(EvaluatePros(inst, run.matching, c.mc()));
  if (a.trace) out["trace"] = TraceJson(inst, run.trace);
  WriteOutput(c.out, Dump(out));
  return kOk;
}

struct ProsArgs {
  std::string instance;
  std::string matching;
};

int Pros(const ProsArgs& a, const Common& c) {
  const Instance inst = LoadInstance(a.instance);
  const Matching m = LoadMatching(inst, a.matching);
  Json out;
  out["matching"] = MatchingToJson(inst, m);
  out["potential_blocks"] = BlocksJson(inst, m, c.mc());
  out["pros"] = ProbabilityJson(EvaluatePros(inst, m, c.mc()));
  WriteOutput(c.out, Dump(out));
  return kOk;
}

struct OptimalArgs {
  std::string instance;
  std::vector<std::string> strategies;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

int Optimal(const OptimalArgs& a, const Common& c) {
  const Instance inst = LoadInstance(a.instance);
  const OptResult opt = OptimalPros(inst, a.budget);
  Json out;
  out["matching"] = MatchingToJson(inst, opt.best_matching);
  out["pros"] = ProbabilityJson(opt.best_pros);
  out["matchings_examined"] = opt.matchings_examined;
  Json ratios = Json::object();
  for (Strategy s : StrategiesArg(a.strategies)) {
    RatioResult r = ApproxRatio(inst, s, opt);
    Json entry;
    entry["matching"] = MatchingToJson(inst, r.matching);
    entry["pros"] = ProbabilityJson(r.pros);
    entry["ratio"] = r.ratio.ToString();
    ratios[StrategyName(s)] = entry;
  }
  out["strategies"] = ratios;
  WriteOutput(c.out, Dump(out));
  return kOk;
}

struct AuditArgs {
  std::string instance;
  std::vector<std::string> strategies;
  std::vector<std::string> levels;
  std::uint64_t budget = kDefaultMisreportBudget;
};

int Audit(const AuditArgs& a, const Common& c) {
  const Instance inst = LoadInstance(a.instance);
  std::vector<IcLevel> levels;
  for (const std::string& l : a.levels) {
    if (l == "ic-c") {
      levels.push_back(IcLevel::kCertain);
    } else if (l == "ic-r") {
      levels.push_back(IcLevel::kRatio);
    } else {
      throw InputError("unknown level '" + l + "' (ic-c or ic-r)");
    }
  }
  if (levels.empty()) levels = {IcLevel::kCertain, IcLevel::kRatio};
  const std::vector<Misreport> space = DeterministicMisreports(inst.num_colleges(), a.budget);
  Json out = Json::array();
  for (Strategy s : StrategiesArg(a.strategies)) {
    for (IcLevel level : levels) {
      IcAuditReport report = AuditIc(inst, s, level, space, c.mc());
      Json entry;
      entry["strategy"] = StrategyName(s);
      entry["level"] = IcLevelName(level);
      entry["misreports_tried"] = report.misreports_tried;
      Json vs = Json::array();
      for (const MisreportOutcome& v : report.violations) {
        Json j;
        j["student"] = inst.student_id(v.student);
        j["misreport"] = v.misreport;
        j["truthful_college"] =
            v.truthful_college == kUnmatched ? Json() : Json(inst.college_id(v.truthful_college));
        j["misreport_college"] =
            v.misreport_college == kUnmatched ? Json() : Json(inst.college_id(v.misreport_college));
        j["improvement"] = ProbabilityJson(v.improvement);
        vs.push_back(j);
      }
      entry["violations"] = vs;
      if (report.violations.empty()) entry["note"] = IcAuditReport::kScopeNote;
      out.push_back(entry);
    }
  }
  WriteOutput(c.out, Dump(out));
  return kOk;
}

struct ExperimentArgs {
  ExperimentConfig config;
  std::vector<std::string> strategies;
  std::vector<std::string> capacities = {"ones", "tight"};
  std::string dist = "uniform";
  std::string svg;
};

int Experiment(ExperimentArgs a, const Common& c) {
  ExperimentConfig& config = a.config;
  config.seed = c.seed;
  config.strategies = StrategiesArg(a.strategies);
  config.rules.clear();
  for (const std::string& r : a.capacities) {
    auto rule = ParseCapacityRule(r);
    if (!rule) throw InputError("unknown capacity rule '" + r + "' (ones or tight)");
    config.rules.push_back(*rule);
  }
  auto kind = ParseDistKind(a.dist);
  if (!kind) throw InputError("unknown distribution '" + a.dist + "'");
  config.dist.kind = *kind;
  std::vector<ExperimentRow> rows;
  try {
    rows = RunExperiment(config);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (c.format == "csv") {
    WriteOutput(c.out, RowsToCsv(rows));
  } else {
    Json out = Json::array();
    for (const ExperimentRow& r : rows) {
      Json j;
      j["trial"] = r.trial;
      j["seed"] = r.seed;
      j["n"] = r.size.n;
      j["m"] = r.size.m;
      j["capacity_rule"] = CapacityRuleName(r.size.rule);
      j["strategy"] = StrategyName(r.strategy);
      j["algorithm_pros"] = r.algorithm_pros.ToString();
      j["optimal_pros"] = r.optimal_pros.ToString();
      j["ratio"] = r.ratio.ToString();
      out.push_back(j);
    }
    WriteOutput(c.out, Dump(out));
  }
  if (!a.svg.empty()) WriteOutput(a.svg, RowsToSvg(rows, config));
  return kOk;
}

int GoldenCheck(const std::vector<std::string>& overrides_raw) {
  std::map<std::string, std::string> overrides;
  for (const std::string& o : overrides_raw) {
    auto eq = o.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--override expects name=value");
    overrides[o.substr(0, eq)] = o.substr(eq + 1);
  }
  std::vector<GoldenResult> results;
  try {
    results = RunGoldens(overrides);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  int failed = 0;
  for (const GoldenResult& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  expected " << r.expected;
    if (!r.pass) std::cout << "  got " << r.actual;
    std::cout << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << results.size() - failed << "/" << results.size() << " goldens pass\n";
  return failed == 0 ? kOk : kGoldenFailure;
}

struct GenArgs {
  std::string what;
  std::optional<std::string> delta, epsilon, y, z;
  std::optional<int> n, k;
  bool flat_weights = false;
  int m = 3;
  int features = 2;
  std::string dist = "uniform";
  double alpha = 2.0, beta = 2.0;
  int support = 3;
  std::vector<int> capacities;
};

int Gen(const GenArgs& a, const Common& c) {
  Instance inst = [&] {
    if (a.what == "random") {
      RandomSpec spec;
      spec.n = a.n.value_or(3);
      spec.m = a.m;
      spec.capacities = a.capacities;
      spec.num_features = a.features;
      auto kind = ParseDistKind(a.dist);
      if (!kind) throw InputError("unknown distribution '" + a.dist + "'");
      spec.dist = {*kind, a.alpha, a.beta, a.support};
      spec.seed = c.seed;
      return GenRandom(spec);
    }
    auto family = ParseFamily(a.what);
    if (!family) throw InputError("unknown family '" + a.what + "'");
    FamilyParams p = DefaultParams(*family);
    if (a.delta) p.delta = RationalArg(*a.delta, "--delta");
    if (a.epsilon) p.epsilon = RationalArg(*a.epsilon, "--epsilon");
    if (a.y) p.y = RationalArg(*a.y, "--y");
    if (a.z) p.z = RationalArg(*a.z, "--z");
    if (a.n) p.n = *a.n;
    if (a.k) p.k = *a.k;
    p.flat_weights = a.flat_weights;
    return Canonical(p);
  }();
  WriteOutput(c.out, SerializeInstance(inst) + "\n");
  return kOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"School choice with feature-weighted uncertain preferences"};
  app.require_subcommand(1);
  Common common;

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run deferred acceptance with one strategy");
  solve_cmd->add_option("instance", solve.instance, "Instance JSON")->required();
  solve_cmd->add_option("--strategy", solve.strategy, "heuf|locv|loicv|herf")->required();
  solve_cmd->add_flag("--trace", solve.trace, "Include round-by-round proposals");
  AddSampling(solve_cmd, common);
  AddOut(solve_cmd, common);

  ProsArgs pros;
  auto* pros_cmd = app.add_subcommand("pros", "Probability of stability of a given matching");
  pros_cmd->add_option("instance", pros.instance, "Instance JSON")->required();
  pros_cmd->add_option("--matching", pros.matching, "Matching JSON or a path to one")->required();
  AddSampling(pros_cmd, common);
  AddOut(pros_cmd, common);

  OptimalArgs optimal;
  auto* optimal_cmd =
      app.add_subcommand("optimal", "Maximum probability of stability and strategy ratios");
  optimal_cmd->add_option("instance", optimal.instance, "Instance JSON")->required();
  optimal_cmd->add_option("--strategy", optimal.strategies, "Strategies to compare (default all)");
  optimal_cmd->add_option("--budget", optimal.budget, "Largest matching space to enumerate");
  AddOut(optimal_cmd, common);

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit-ic", "Search deterministic misreports");
  audit_cmd->add_option("instance", audit.instance, "Instance JSON")->required();
  audit_cmd->add_option("--strategy", audit.strategies, "Strategies to audit (default all)");
  audit_cmd->add_option("--level", audit.levels, "ic-c and/or ic-r (default both)");
  audit_cmd->add_option("--budget", audit.budget, "Largest misreport space");
  AddSampling(audit_cmd, common);
  AddOut(audit_cmd, common);

  ExperimentArgs exp;
  exp.config.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* exp_cmd = app.add_subcommand("experiment", "Approximation ratios on random instances");
  exp_cmd->add_option("--trials", exp.config.trials, "Number of instances")
      ->check(CLI::NonNegativeNumber);
  exp_cmd->add_option("--n", exp.config.n_values, "Student counts")->check(CLI::PositiveNumber);
  exp_cmd->add_option("--m", exp.config.m_values, "College counts (default m = n)")
      ->check(CLI::PositiveNumber);
  exp_cmd->add_option("--capacities", exp.capacities, "ones and/or tight");
  exp_cmd->add_option("--strategy", exp.strategies, "Strategies (default all)");
  exp_cmd->add_option("--features", exp.config.num_features, "Feature count")
      ->check(CLI::Range(1, 16));
  exp_cmd->add_option("--dist", exp.dist, "uniform|beta2|discrete|point_mass");
  exp_cmd->add_option("--budget", exp.config.budget, "Largest matching space per trial");
  exp_cmd->add_option("--threads", exp.config.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  exp_cmd->add_option("--svg", exp.svg, "Box plot output path");
  exp_cmd->add_option("--seed", common.seed, "Master seed");
  exp_cmd->add_option("--format", common.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  AddOut(exp_cmd, common);

  std::vector<std::string> overrides;
  auto* check_cmd = app.add_subcommand("paper-check", "Verify the built-in golden values");
  check_cmd->add_option("--override", overrides, "Replace an expectation: name=value");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a named family instance or a random one");
  gen_cmd->add_option("what", gen.what, "Family name or 'random'")->required();
  gen_cmd->add_option("--delta", gen.delta, "Family gap parameter");
  gen_cmd->add_option("--epsilon", gen.epsilon, "Family perturbation");
  gen_cmd->add_option("--y", gen.y);
  gen_cmd->add_option("--z", gen.z);
  gen_cmd->add_option("--n", gen.n, "Students");
  gen_cmd->add_option("--k", gen.k, "Blocks (golden-ratio)");
  gen_cmd->add_flag("--flat-weights", gen.flat_weights, "non-transitive: flat weights");
  gen_cmd->add_option("--m", gen.m, "Colleges (random)");
  gen_cmd->add_option("--features", gen.features, "Features (random)");
  gen_cmd->add_option("--dist", gen.dist, "uniform|beta2|discrete|point_mass (random)");
  gen_cmd->add_option("--alpha", gen.alpha);
  gen_cmd->add_option("--beta", gen.beta);
  gen_cmd->add_option("--support", gen.support, "Support size (discrete)");
  gen_cmd->add_option("--capacities", gen.capacities, "Seats per college (random)");
  gen_cmd->add_option("--seed", common.seed, "Random seed");
  AddOut(gen_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return Solve(solve, common);
    if (*pros_cmd) return Pros(pros, common);
    if (*optimal_cmd) return Optimal(optimal, common);
    if (*audit_cmd) return Audit(audit, common);
    if (*exp_cmd) return Experiment(exp, common);
    if (*check_cmd) return GoldenCheck(overrides);
    if (*gen_cmd) return Gen(gen, common);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace
}  // namespace schoolchoice::cli

int main(int argc, char** argv) { return schoolchoice::cli::Main(argc, argv); }
