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

#ifndef SCHOOLCHOICE_SAMPLING_H_
#define SCHOOLCHOICE_SAMPLING_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "schoolchoice/model.h"

namespace schoolchoice {

using Engine = std::mt19937_64;

std::uint64_t SplitMix64(std::uint64_t x);

// Engine for the substream identified by `keys` under `seed`. The same
// (seed, keys) always yields the same stream regardless of which other
// streams were drawn before, so parallel and serial runs agree.
Engine MakeStream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys);

// Draws weight vectors from one student's distribution.
class WeightSampler {
 public:
  WeightSampler(const WeightDistribution& dist, int num_features);

  // Writes one weight vector (num_features entries, summing to 1).
  void Draw(Engine& engine, std::span<double> out);

 private:
  const WeightDistribution* dist_;
  int num_features_;
  std::vector<double> cumulative_;  // discrete only
  std::vector<std::vector<double>> points_;
  std::exponential_distribution<double> exponential_{1.0};
  std::gamma_distribution<double> gamma_alpha_;
  std::gamma_distribution<double> gamma_beta_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace schoolchoice

#endif  // SCHOOLCHOICE_SAMPLING_H_
