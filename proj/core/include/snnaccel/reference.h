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

// Software reference paths over a DeploymentArtifact:
//
//  * the TTFS reference, a discrete-time integer simulation whose predictions
//    the accelerator must reproduce exactly, and
//  * dense grouped-neuron baselines (FP32 and INT8) that run the same
//    parameters as a plain matrix-vector product.
//
// Per time step t the TTFS reference does, for every unfired neuron:
//   1. v += sum of integer weights from sources spiking at t
//   2. if v >= threshold: fire, record t, freeze
//   3. v = floor(v * leak_num / leak_den)

#ifndef SNNACCEL_REFERENCE_H_
#define SNNACCEL_REFERENCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "snnaccel/artifact.h"
#include "snnaccel/spike.h"

namespace snnaccel {

struct NeuronState {
  std::int64_t potential = 0;
  bool fired = false;
  std::optional<std::uint32_t> first_spike;
};

struct DecodeOutcome {
  std::uint32_t label = 0;
  bool no_spike = false;
};

// Grouped TTFS readout. Earliest class wins; a tie on time goes to the class
// with more neurons firing at that time, then to the lowest class index.
// All-silent input decodes to label 0 with no_spike set.
DecodeOutcome DecodeGroupedTtfs(
    std::span<const std::optional<std::uint32_t>> class_first_spikes,
    const DecodeMetadata& decode,
    std::span<const std::uint32_t> spike_counts_at_min);

struct ReferenceTrace {
  InferenceResult result;
  // One entry per output neuron, in neuron-id order.
  std::vector<NeuronState> neurons;
};

// Reads the dense WGHT block. Events must be sorted by (time, neuron), name
// input neurons only and fall inside the time window (ContractError
// otherwise). Accumulator overflow raises ArithmeticError.
ReferenceTrace TraceTtfsReference(const DeploymentArtifact& artifact,
                                  std::span<const SpikeEvent> events);
InferenceResult RunTtfsReference(const DeploymentArtifact& artifact,
                                 std::span<const SpikeEvent> events);

enum class DenseMode {
  kFp32,
  kInt8,
};

// Raw per-output-neuron scores y = W x. FP32 mode uses s*q weights on
// x = intensity/255; INT8 mode uses q on raw intensities.
std::vector<double> DenseScores(const DeploymentArtifact& artifact,
                                std::span<const std::uint8_t> image,
                                DenseMode mode);

// Class score is the maximum over the class's neuron group; the label is the
// argmax, ties to the lowest class index. no_spike is always false.
InferenceResult RunDenseBaseline(const DeploymentArtifact& artifact,
                                 std::span<const std::uint8_t> image,
                                 DenseMode mode);

}  // namespace snnaccel

#endif  // SNNACCEL_REFERENCE_H_
