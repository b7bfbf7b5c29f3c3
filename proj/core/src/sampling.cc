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

#include "schoolchoice/sampling.h"

#include <algorithm>

namespace schoolchoice {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Engine MakeStream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
  std::uint64_t state = SplitMix64(seed);
  for (std::uint64_t key : keys) state = SplitMix64(state ^ SplitMix64(key + 1));
  std::seed_seq seq{static_cast<std::uint32_t>(state),
                    static_cast<std::uint32_t>(state >> 32),
                    static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  return Engine(seq);
}

WeightSampler::WeightSampler(const WeightDistribution& dist, int num_features)
    : dist_(&dist), num_features_(num_features) {
  if (const auto* discrete = std::get_if<DiscreteWeights>(&dist)) {
    double running = 0.0;
    for (const auto& point : discrete->support) {
      running += ToDouble(point.probability);
      cumulative_.push_back(running);
      std::vector<double> w;
      for (const auto& x : point.weights) w.push_back(ToDouble(x));
      points_.push_back(std::move(w));
    }
  } else if (const auto* beta = std::get_if<BetaTwoFeature>(&dist)) {
    gamma_alpha_ = std::gamma_distribution<double>(beta->alpha, 1.0);
    gamma_beta_ = std::gamma_distribution<double>(beta->beta, 1.0);
  }
}

void WeightSampler::Draw(Engine& engine, std::span<double> out) {
  if (std::holds_alternative<UniformSimplex>(*dist_)) {
    if (num_features_ == 1) {
      out[0] = 1.0;
      return;
    }
    double total = 0.0;
    for (int f = 0; f < num_features_; ++f) {
      out[f] = exponential_(engine);
      total += out[f];
    }
    for (int f = 0; f < num_features_; ++f) out[f] /= total;
    return;
  }
  if (std::holds_alternative<BetaTwoFeature>(*dist_)) {
    double x = gamma_alpha_(engine);
    double y = gamma_beta_(engine);
    out[0] = x / (x + y);
    out[1] = 1.0 - out[0];
    return;
  }
  double u = unit_(engine) * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  std::size_t index = std::min<std::size_t>(it - cumulative_.begin(),
                                            points_.size() - 1);
  std::copy(points_[index].begin(), points_[index].end(), out.begin());
}

}  // namespace schoolchoice
