// Copyright 2026 The snnaccel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Deterministic 784->150 network and digit-like inputs for benchmarks.

#ifndef SNNACCEL_BENCHMARKS_FIXTURES_H_
#define SNNACCEL_BENCHMARKS_FIXTURES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "snnaccel/model.h"

namespace snnaccel::bench {

inline NetworkSpec DeployedShape(std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<float> w(0.0f, 0.05f);
  std::vector<float> weights(150 * 784);
  for (float& v : weights) v = w(rng);
  NeuronConfig neurons;
  neurons.thresholds.assign(150, 0.5);
  return BuildSequential({LayerSpec::Linear(784, 150, std::move(weights)), LayerSpec::Lif(150)},
                         std::move(neurons), EncoderConfig{});
}

// About 20% lit pixels, like a centred digit.
inline std::vector<std::uint8_t> DigitLikeImage(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> px(1, 255);
  std::bernoulli_distribution lit(0.2);
  std::vector<std::uint8_t> image(784);
  for (auto& p : image) p = lit(rng) ? static_cast<std::uint8_t>(px(rng)) : 0;
  return image;
}

}  // namespace snnaccel::bench

#endif  // SNNACCEL_BENCHMARKS_FIXTURES_H_
