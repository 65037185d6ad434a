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

// A small seeded trainer that produces deployable grouped-TTFS weights.
//
// 1. Fit one prototype row per class with softmax regression (mini-batch
//    SGD, no bias) on x = intensity / 255.
// 2. Refine: export the current network, find each training image's TTFS
//    decision step with the reference runtime, and take an SGD pass on the
//    binary snapshot of inputs that had spiked by that step.
// 3. Replicate every prototype into `group_size` neurons with a small
//    deterministic weight jitter. Neuron k of a group gets the threshold
//    ladder_k * m, where m is the mean final potential of the true class's
//    prototype over the training set and ladder_k runs linearly from
//    ladder_low to ladder_high.

#ifndef SNNACCEL_TRAINER_H_
#define SNNACCEL_TRAINER_H_

#include <cstdint>

#include "snnaccel/dataset.h"
#include "snnaccel/model.h"

namespace snnaccel {

struct TrainerOptions {
  std::uint32_t out_dim = 150;
  std::uint32_t num_classes = 10;
  std::uint64_t seed = 42;
  std::uint32_t base_epochs = 3;
  std::uint32_t refine_rounds = 3;
  std::uint32_t batch_size = 100;
  double learning_rate = 0.1;
  double ladder_low = 0.40;
  double ladder_high = 1.1;
  double jitter = 0.01;
  unsigned jobs = 0;  // refinement worker threads; 0 = all cores
  EncoderConfig encoder;
};

// Throws TrainingError on degenerate data: empty set, labels outside
// [0, num_classes), out_dim not a multiple of num_classes, or inputs that
// never drive the true-class prototype positive.
NetworkSpec TrainLinearTtfs(const Dataset& train, const TrainerOptions& options = {});

// splitmix64 step; the trainer's and the spike-drop generator's only source
// of randomness.
std::uint64_t SplitMix64(std::uint64_t& state);

}  // namespace snnaccel

#endif  // SNNACCEL_TRAINER_H_
