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

#include "schoolchoice/prob.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "schoolchoice/sampling.h"

namespace schoolchoice {
namespace {

// Keys that separate the Monte Carlo substreams of different quantities.
constexpr std::uint64_t kPairStream = 1;
constexpr std::uint64_t kTopStream = 2;
constexpr std::uint64_t kProsStream = 3;

std::vector<Rational> Differences(const Instance& inst, int s, int ci, int cj) {
  std::vector<Rational> delta(inst.num_features());
  for (int f = 0; f < inst.num_features(); ++f) {
    delta[f] = inst.utility(s, f, ci) - inst.utility(s, f, cj);
  }
  return delta;
}

Rational Dot(const std::vector<Rational>& w, const std::vector<Rational>& x) {
  Rational total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) total += w[i] * x[i];
  return total;
}

void CheckCollege(const Instance& inst, int c) {
  if (c < 0 || c >= inst.num_colleges()) {
    throw std::invalid_argument("college index " + std::to_string(c) +
                                " out of range");
  }
}

void CheckStudent(const Instance& inst, int s) {
  if (s < 0 || s >= inst.num_students()) {
    throw std::invalid_argument("student index " + std::to_string(s) +
                                " out of range");
  }
}

void RequireFeasible(const Instance& inst, const Matching& m) {
  FeasibilityVerdict verdict = ValidateMatching(inst, m);
  if (!verdict.ok) throw std::invalid_argument("infeasible matching: " + verdict.reason);
}

ProbabilityKind KindOf(const WeightDistribution& dist) {
  return std::holds_alternative<BetaTwoFeature>(dist) ? ProbabilityKind::kClosedForm
                                                      : ProbabilityKind::kExact;
}

// Uniform over a single feature is the point mass at (1).
bool IsDegenerateUniform(const Instance& inst, int s) {
  return inst.num_features() == 1 &&
         std::holds_alternative<UniformSimplex>(inst.weights(s));
}

// Weight vectors and probabilities of a finite-support student.
std::vector<WeightPoint> FiniteSupport(const Instance& inst, int s) {
  if (const auto* d = std::get_if<DiscreteWeights>(&inst.weights(s))) return d->support;
  return {WeightPoint{{Rational(1)}, Rational(1)}};
}

bool HasFiniteSupport(const Instance& inst, int s) {
  return std::holds_alternative<DiscreteWeights>(inst.weights(s)) ||
         IsDegenerateUniform(inst, s);
}

std::vector<double> ToDoubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(ToDouble(x));
  return out;
}

double DotDouble(std::span<const double> w, const std::vector<double>& x) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) total += w[i] * x[i];
  return total;
}

Probability Estimate(std::uint64_t hits, std::uint64_t samples, std::uint64_t seed) {
  double p = static_cast<double>(hits) / static_cast<double>(samples);
  Probability out;
  out.value = Number::Real(p);
  out.kind = ProbabilityKind::kEstimate;
  out.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  out.samples = samples;
  out.seed = seed;
  return out;
}

Probability ExactProbability(Rational value) {
  Probability out;
  out.value = Number(std::move(value));
  return out;
}

Probability FromMeasure(Number value, const WeightDistribution& dist) {
  Probability out;
  out.kind = value.is_exact() ? ProbabilityKind::kExact : KindOf(dist);
  out.value = std::move(value);
  return out;
}

// Continuous case for three or more features: the sign pattern settles the
// answer outright when all differences agree, because every weight is
// positive almost surely.
std::optional<Rational> SignShortcut(const std::vector<Rational>& delta, bool strict) {
  bool any_positive = false;
  bool any_negative = false;
  for (const auto& d : delta) {
    if (sgn(d) > 0) any_positive = true;
    if (sgn(d) < 0) any_negative = true;
  }
  if (!any_positive && !any_negative) return Rational(strict ? 0 : 1);
  if (!any_negative) return Rational(1);
  if (!any_positive) return Rational(0);
  return std::nullopt;
}

Probability SamplePrefers(const Instance& inst, int s, int ci, int cj,
                          const MonteCarloOptions& mc, bool strict) {
  if (mc.samples == 0) throw std::invalid_argument("samples must be positive");
  // One stream per unordered pair, so Pr[a > b] and Pr[b >= a] always add
  // to exactly one.
  const bool flipped = ci > cj;
  const int lo = flipped ? cj : ci;
  const int hi = flipped ? ci : cj;
  const std::vector<double> delta = ToDoubles(Differences(inst, s, lo, hi));
  Engine engine = MakeStream(mc.seed, {kPairStream, static_cast<std::uint64_t>(s),
                                       static_cast<std::uint64_t>(lo),
                                       static_cast<std::uint64_t>(hi)});
  WeightSampler sampler(inst.weights(s), inst.num_features());
  std::vector<double> w(inst.num_features());
  std::uint64_t lo_wins = 0;  // lo strictly preferred
  std::uint64_t hi_wins = 0;  // hi strictly preferred
  for (std::uint64_t i = 0; i < mc.samples; ++i) {
    sampler.Draw(engine, w);
    double v = DotDouble(w, delta);
    if (v > 0) ++lo_wins;
    if (v < 0) ++hi_wins;
  }
  // ci > cj strictly, or ci >= cj as the complement of cj > ci.
  std::uint64_t hits;
  if (!flipped) {
    hits = strict ? lo_wins : mc.samples - hi_wins;
  } else {
    hits = strict ? hi_wins : mc.samples - lo_wins;
  }
  return Estimate(hits, mc.samples, mc.seed);
}

}  // namespace

const char* KindName(ProbabilityKind kind) {
  switch (kind) {
    case ProbabilityKind::kExact:
      return "exact";
    case ProbabilityKind::kClosedForm:
      return "closed_form";
    case ProbabilityKind::kEstimate:
      return "estimate";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

bool WeightInterval::IsEmpty() const {
  int cmp = ::cmp(lower, upper);
  if (cmp > 0) return true;
  if (cmp == 0) return !(lower_closed && upper_closed);
  return false;
}

bool WeightInterval::Contains(const Rational& w) const {
  int lo = ::cmp(w, lower);
  int hi = ::cmp(w, upper);
  bool above = lower_closed ? lo >= 0 : lo > 0;
  bool below = upper_closed ? hi <= 0 : hi < 0;
  return above && below;
}

WeightInterval WeightInterval::Intersect(const WeightInterval& other) const {
  WeightInterval out;
  int lo = ::cmp(lower, other.lower);
  if (lo > 0) {
    out.lower = lower;
    out.lower_closed = lower_closed;
  } else if (lo < 0) {
    out.lower = other.lower;
    out.lower_closed = other.lower_closed;
  } else {
    out.lower = lower;
    out.lower_closed = lower_closed && other.lower_closed;
  }
  int hi = ::cmp(upper, other.upper);
  if (hi < 0) {
    out.upper = upper;
    out.upper_closed = upper_closed;
  } else if (hi > 0) {
    out.upper = other.upper;
    out.upper_closed = other.upper_closed;
  } else {
    out.upper = upper;
    out.upper_closed = upper_closed && other.upper_closed;
  }
  if (out.IsEmpty()) return Empty();
  return out;
}

PairwiseCase PairwiseCase2F(const Instance& inst, int s, int ci, int cj) {
  if (inst.num_features() != 2) {
    throw std::invalid_argument("pairwise case split needs exactly two features");
  }
  CheckStudent(inst, s);
  CheckCollege(inst, ci);
  CheckCollege(inst, cj);
  Rational a = inst.utility(s, 0, ci) - inst.utility(s, 0, cj);
  Rational b = inst.utility(s, 1, ci) - inst.utility(s, 1, cj);
  if (sgn(a) > 0 && sgn(b) > 0) return {PairwiseTag::kAlwaysPreferred, Rational(0)};
  if (sgn(a) <= 0 && sgn(b) <= 0) return {PairwiseTag::kNeverPreferred, Rational(0)};
  if (sgn(a) > 0) {
    // w a + (1 - w) b > 0  <=>  w > -b / (a - b)
    Rational d2 = -b;
    Rational eta = sgn(d2) == 0 ? Rational(0) : Rational(d2 / (a + d2));
    return {PairwiseTag::kThresholdAbove, eta};
  }
  Rational d1 = -a;
  Rational eta = b / (d1 + b);
  return {PairwiseTag::kThresholdBelow, eta};
}

WeightInterval PreferenceInterval(const Instance& inst, int s, int ci, int cj,
                                  bool strict) {
  if (strict) {
    PairwiseCase pc = PairwiseCase2F(inst, s, ci, cj);
    switch (pc.tag) {
      case PairwiseTag::kAlwaysPreferred:
        return WeightInterval::Full();
      case PairwiseTag::kNeverPreferred:
        return WeightInterval::Empty();
      case PairwiseTag::kThresholdAbove:
        return {pc.eta, Rational(1), false, true};
      case PairwiseTag::kThresholdBelow:
        return {Rational(0), pc.eta, true, false};
    }
  }
  // ci >= cj is the complement of cj > ci.
  PairwiseCase pc = PairwiseCase2F(inst, s, cj, ci);
  switch (pc.tag) {
    case PairwiseTag::kAlwaysPreferred:
      return WeightInterval::Empty();
    case PairwiseTag::kNeverPreferred:
      return WeightInterval::Full();
    case PairwiseTag::kThresholdAbove:
      return {Rational(0), pc.eta, true, true};
    case PairwiseTag::kThresholdBelow:
      return {pc.eta, Rational(1), true, true};
  }
  return WeightInterval::Empty();
}

Number IntervalMeasure(const WeightDistribution& dist,
                       const WeightInterval& interval) {
  if (interval.IsEmpty()) return Number(0);
  if (std::holds_alternative<UniformSimplex>(dist)) {
    Rational lo = std::max(interval.lower, Rational(0));
    Rational hi = std::min(interval.upper, Rational(1));
    if (lo >= hi) return Number(0);
    return Number(Rational(hi - lo));
  }
  if (const auto* discrete = std::get_if<DiscreteWeights>(&dist)) {
    Rational total = 0;
    for (const auto& point : discrete->support) {
      if (point.weights.size() != 2) {
        throw std::invalid_argument("interval measure needs two-feature weights");
      }
      if (interval.Contains(point.weights[0])) total += point.probability;
    }
    return Number(total);
  }
  const auto& beta = std::get<BetaTwoFeature>(dist);
  if (interval.lower <= 0 && interval.upper >= 1) return Number(1);
  double lo = std::clamp(ToDouble(interval.lower), 0.0, 1.0);
  double hi = std::clamp(ToDouble(interval.upper), 0.0, 1.0);
  double value = boost::math::ibeta(beta.alpha, beta.beta, hi) -
                 boost::math::ibeta(beta.alpha, beta.beta, lo);
  return Number::Real(std::clamp(value, 0.0, 1.0));
}

// ---------------------------------------------------------------------------

bool HalfSpace::Contains(std::span<const double> weights) const {
  double total = 0.0;
  for (std::size_t k = 0; k < normal.size(); ++k) total += ToDouble(normal[k]) * weights[k];
  double bound = ToDouble(offset);
  return strict ? total < bound : total <= bound;
}

HalfSpace PreferenceHalfSpace(const Instance& inst, int s, int ci, int cj,
                              bool strict) {
  CheckStudent(inst, s);
  CheckCollege(inst, ci);
  CheckCollege(inst, cj);
  std::vector<Rational> delta = Differences(inst, s, ci, cj);
  HalfSpace h;
  const int last = inst.num_features() - 1;
  h.offset = delta[last];
  for (int k = 0; k < last; ++k) h.normal.push_back(delta[last] - delta[k]);
  h.strict = strict;
  return h;
}

Probability PrPrefers(const Instance& inst, int s, int ci, int cj, bool strict,
                      const MonteCarloOptions& mc) {
  CheckStudent(inst, s);
  CheckCollege(inst, ci);
  CheckCollege(inst, cj);
  if (ci == cj) throw std::invalid_argument("pairwise probability needs two distinct colleges");
  const WeightDistribution& dist = inst.weights(s);
  if (inst.num_features() == 2) {
    return FromMeasure(IntervalMeasure(dist, PreferenceInterval(inst, s, ci, cj, strict)),
                       dist);
  }
  std::vector<Rational> delta = Differences(inst, s, ci, cj);
  if (HasFiniteSupport(inst, s)) {
    Rational total = 0;
    for (const auto& point : FiniteSupport(inst, s)) {
      int sign = sgn(Dot(point.weights, delta));
      if (strict ? sign > 0 : sign >= 0) total += point.probability;
    }
    return ExactProbability(total);
  }
  if (auto shortcut = SignShortcut(delta, strict)) return ExactProbability(*shortcut);
  return SamplePrefers(inst, s, ci, cj, mc, strict);
}

Probability PrPrefersMonteCarlo(const Instance& inst, int s, int ci, int cj,
                                bool strict, const MonteCarloOptions& mc) {
  CheckStudent(inst, s);
  CheckCollege(inst, ci);
  CheckCollege(inst, cj);
  if (ci == cj) throw std::invalid_argument("pairwise probability needs two distinct colleges");
  return SamplePrefers(inst, s, ci, cj, mc, strict);
}

Probability PrTop(const Instance& inst, int s, int c, std::span<const int> pool,
                  const MonteCarloOptions& mc) {
  CheckStudent(inst, s);
  CheckCollege(inst, c);
  if (std::find(pool.begin(), pool.end(), c) == pool.end()) {
    throw std::invalid_argument("college is not in the pool");
  }
  const WeightDistribution& dist = inst.weights(s);
  if (inst.num_features() == 2) {
    WeightInterval interval = WeightInterval::Full();
    for (int other : pool) {
      if (other == c) continue;
      interval = interval.Intersect(PreferenceInterval(inst, s, c, other, false));
    }
    return FromMeasure(IntervalMeasure(dist, interval), dist);
  }
  std::vector<std::vector<Rational>> deltas;
  for (int other : pool) {
    if (other != c) deltas.push_back(Differences(inst, s, c, other));
  }
  if (deltas.empty()) return ExactProbability(Rational(1));
  if (HasFiniteSupport(inst, s)) {
    Rational total = 0;
    for (const auto& point : FiniteSupport(inst, s)) {
      bool top = std::all_of(deltas.begin(), deltas.end(), [&](const auto& d) {
        return sgn(Dot(point.weights, d)) >= 0;
      });
      if (top) total += point.probability;
    }
    return ExactProbability(total);
  }
  bool settled = true;
  for (const auto& delta : deltas) {
    auto shortcut = SignShortcut(delta, false);
    if (!shortcut) {
      settled = false;
    } else if (*shortcut == 0) {
      return ExactProbability(Rational(0));
    }
  }
  if (settled) return ExactProbability(Rational(1));
  if (mc.samples == 0) throw std::invalid_argument("samples must be positive");
  std::uint64_t mask = 0;
  for (int other : pool) mask ^= SplitMix64(static_cast<std::uint64_t>(other));
  std::vector<std::vector<double>> d;
  for (const auto& x : deltas) d.push_back(ToDoubles(x));
  Engine engine = MakeStream(mc.seed, {kTopStream, static_cast<std::uint64_t>(s),
                                       static_cast<std::uint64_t>(c), mask});
  WeightSampler sampler(dist, inst.num_features());
  std::vector<double> w(inst.num_features());
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < mc.samples; ++i) {
    sampler.Draw(engine, w);
    bool top = std::all_of(d.begin(), d.end(),
                           [&](const auto& x) { return DotDouble(w, x) >= 0; });
    if (top) ++hits;
  }
  return Estimate(hits, mc.samples, mc.seed);
}

MeanWeight MeanWeightOf(const Instance& inst, int s) {
  CheckStudent(inst, s);
  const int num_features = inst.num_features();
  const WeightDistribution& dist = inst.weights(s);
  MeanWeight out;
  if (std::holds_alternative<UniformSimplex>(dist)) {
    out.mean.assign(num_features, Number(Rational(1, num_features)));
    if (num_features == 2) {
      out.has_tails = true;
      out.prob_at_most_mean = Number(Rational(1, 2));
      out.prob_at_least_mean = Number(Rational(1, 2));
    }
    return out;
  }
  if (const auto* discrete = std::get_if<DiscreteWeights>(&dist)) {
    std::vector<Rational> mean(num_features, Rational(0));
    for (const auto& point : discrete->support) {
      for (int f = 0; f < num_features; ++f) mean[f] += point.probability * point.weights[f];
    }
    for (const auto& x : mean) out.mean.emplace_back(x);
    if (num_features == 2) {
      Rational at_most = 0;
      Rational at_least = 0;
      for (const auto& point : discrete->support) {
        if (point.weights[0] <= mean[0]) at_most += point.probability;
        if (point.weights[0] >= mean[0]) at_least += point.probability;
      }
      out.has_tails = true;
      out.prob_at_most_mean = Number(at_most);
      out.prob_at_least_mean = Number(at_least);
    }
    return out;
  }
  const auto& beta = std::get<BetaTwoFeature>(dist);
  // Shape parameters are read as the decimals they were written as, so the
  // mean is an exact fraction.
  Rational a = RationalFromDecimalDouble(beta.alpha);
  Rational b = RationalFromDecimalDouble(beta.beta);
  Rational mean = a / (a + b);
  out.mean = {Number(mean), Number(Rational(1 - mean))};
  out.has_tails = true;
  if (a == b) {
    out.prob_at_most_mean = Number(Rational(1, 2));
    out.prob_at_least_mean = Number(Rational(1, 2));
  } else {
    double below = boost::math::ibeta(beta.alpha, beta.beta, ToDouble(mean));
    out.prob_at_most_mean = Number::Real(below);
    out.prob_at_least_mean = Number::Real(1.0 - below);
  }
  return out;
}

Number ExpectedUtility(const Instance& inst, int s, int c) {
  CheckCollege(inst, c);
  MeanWeight mw = MeanWeightOf(inst, s);
  Number total = 0;
  for (int f = 0; f < inst.num_features(); ++f) {
    total += mw.mean[f] * Number(inst.utility(s, f, c));
  }
  return total;
}

// ---------------------------------------------------------------------------

std::vector<PotentialBlock> PotentialBlocks(const Instance& inst, const Matching& m,
                                            int s, const MonteCarloOptions& mc) {
  CheckStudent(inst, s);
  std::vector<PotentialBlock> out;
  const int current = m.college_of(s);
  for (int c = 0; c < inst.num_colleges(); ++c) {
    if (c == current || !CollegeWouldAdmit(inst, m, c, s)) continue;
    if (current == kUnmatched) {
      out.push_back({c, ExactProbability(Rational(1))});
      continue;
    }
    Probability p = PrPrefers(inst, s, c, current, true, mc);
    if (p.value > Number(0)) out.push_back({c, std::move(p)});
  }
  return out;
}

WeightInterval NoBlockInterval(const Instance& inst, const Matching& m, int s) {
  CheckStudent(inst, s);
  const int current = m.college_of(s);
  WeightInterval interval = WeightInterval::Full();
  for (int c = 0; c < inst.num_colleges(); ++c) {
    if (c == current || !CollegeWouldAdmit(inst, m, c, s)) continue;
    if (current == kUnmatched) return WeightInterval::Empty();
    // Colleges with a zero chance of being strictly preferred cannot block.
    WeightInterval strict = PreferenceInterval(inst, s, c, current, true);
    if (IntervalMeasure(inst.weights(s), strict) == Number(0)) continue;
    interval = interval.Intersect(PreferenceInterval(inst, s, current, c, false));
  }
  return interval;
}

ProsResult ProsExact2F(const Instance& inst, const Matching& m) {
  if (inst.num_features() != 2) {
    throw std::invalid_argument("exact stability probability needs exactly two features");
  }
  RequireFeasible(inst, m);
  Number product = 1;
  ProbabilityKind kind = ProbabilityKind::kExact;
  for (int s = 0; s < inst.num_students(); ++s) {
    Number factor = IntervalMeasure(inst.weights(s), NoBlockInterval(inst, m, s));
    if (!factor.is_exact()) kind = ProbabilityKind::kClosedForm;
    product *= factor;
    if (product == Number(0)) break;
  }
  if (product.is_exact()) kind = ProbabilityKind::kExact;
  ProsResult out;
  out.value = product;
  out.kind = kind;
  return out;
}

ProsResult ProsDiscrete(const Instance& inst, const Matching& m) {
  for (int s = 0; s < inst.num_students(); ++s) {
    if (!HasFiniteSupport(inst, s)) {
      throw std::invalid_argument("student " + inst.student_id(s) +
                                  " has no finite weight support");
    }
  }
  RequireFeasible(inst, m);
  Rational product = 1;
  for (int s = 0; s < inst.num_students() && product != 0; ++s) {
    const int current = m.college_of(s);
    std::vector<std::vector<Rational>> deltas;
    bool certain_block = false;
    for (int c = 0; c < inst.num_colleges(); ++c) {
      if (c == current || !CollegeWouldAdmit(inst, m, c, s)) continue;
      if (current == kUnmatched) {
        certain_block = true;
        break;
      }
      deltas.push_back(Differences(inst, s, c, current));
    }
    if (certain_block) {
      product = 0;
      break;
    }
    Rational safe = 0;
    for (const auto& point : FiniteSupport(inst, s)) {
      bool blocked = std::any_of(deltas.begin(), deltas.end(), [&](const auto& d) {
        return sgn(Dot(point.weights, d)) > 0;
      });
      if (!blocked) safe += point.probability;
    }
    product *= safe;
  }
  ProsResult out;
  out.value = Number(product);
  return out;
}

ProsResult ProsMonteCarlo(const Instance& inst, const Matching& m,
                          std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  RequireFeasible(inst, m);
  const int n = inst.num_students();
  const int num_features = inst.num_features();
  std::vector<double> p(n, 1.0);
  std::vector<double> w(num_features);
  for (int s = 0; s < n; ++s) {
    const int current = m.college_of(s);
    std::vector<std::vector<double>> deltas;
    bool certain_block = false;
    for (int c = 0; c < inst.num_colleges(); ++c) {
      if (c == current || !CollegeWouldAdmit(inst, m, c, s)) continue;
      if (current == kUnmatched) {
        certain_block = true;
        break;
      }
      deltas.push_back(ToDoubles(Differences(inst, s, c, current)));
    }
    if (certain_block) {
      p[s] = 0.0;
      continue;
    }
    if (deltas.empty()) continue;
    Engine engine = MakeStream(seed, {kProsStream, static_cast<std::uint64_t>(s)});
    WeightSampler sampler(inst.weights(s), num_features);
    std::uint64_t safe = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
      sampler.Draw(engine, w);
      bool blocked = std::any_of(deltas.begin(), deltas.end(),
                                 [&](const auto& d) { return DotDouble(w, d) > 0; });
      if (!blocked) ++safe;
    }
    p[s] = static_cast<double>(safe) / static_cast<double>(samples);
  }
  // Delta method: Var(prod p_s) ~ sum_s (prod_{t != s} p_t)^2 Var(p_s).
  std::vector<double> prefix(n + 1, 1.0);
  std::vector<double> suffix(n + 1, 1.0);
  for (int s = 0; s < n; ++s) prefix[s + 1] = prefix[s] * p[s];
  for (int s = n - 1; s >= 0; --s) suffix[s] = suffix[s + 1] * p[s];
  double variance = 0.0;
  for (int s = 0; s < n; ++s) {
    double others = prefix[s] * suffix[s + 1];
    variance += others * others * p[s] * (1.0 - p[s]) / static_cast<double>(samples);
  }
  ProsResult out;
  out.value = Number::Real(prefix[n]);
  out.kind = ProbabilityKind::kEstimate;
  out.std_error = std::sqrt(variance);
  out.samples = samples;
  out.seed = seed;
  return out;
}

bool HasExactPros(const Instance& inst) {
  if (inst.num_features() == 2) return true;
  for (int s = 0; s < inst.num_students(); ++s) {
    if (!HasFiniteSupport(inst, s)) return false;
  }
  return true;
}

ProsResult EvaluatePros(const Instance& inst, const Matching& m,
                        const MonteCarloOptions& mc) {
  if (inst.num_features() == 2) return ProsExact2F(inst, m);
  if (HasExactPros(inst)) return ProsDiscrete(inst, m);
  return ProsMonteCarlo(inst, m, mc.samples, mc.seed);
}

}  // namespace schoolchoice
