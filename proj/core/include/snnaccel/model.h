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

// Module-style network definition (Sequential of Linear + LIF), TTFS input
// encoding, symmetric INT8 quantization and export to a DeploymentArtifact.

#ifndef SNNACCEL_MODEL_H_
#define SNNACCEL_MODEL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "snnaccel/artifact.h"
#include "snnaccel/spike.h"

namespace snnaccel {

struct LayerSpec {
  LayerKind kind = LayerKind::kLinear;
  std::uint32_t in_dim = 0;
  std::uint32_t out_dim = 0;
  // Training-domain weights, out_dim x in_dim row-major. Empty for LIF.
  std::vector<float> weights;

  static LayerSpec Linear(std::uint32_t in_dim, std::uint32_t out_dim,
                          std::vector<float> weights);
  static LayerSpec Lif(std::uint32_t dim);
};

struct NeuronConfig {
  // One positive training-domain threshold per LIF neuron.
  std::vector<double> thresholds;
  std::uint32_t leak_num = 1;
  std::uint32_t leak_den = 1;
  bool fire_once = true;
};

struct EncoderConfig {
  std::uint32_t time_window = 64;
  std::uint32_t intensity_max = 255;
};

struct NetworkSpec {
  std::vector<LayerSpec> stages;
  NeuronConfig neurons;
  EncoderConfig encoder;

  const LayerSpec& linear() const { return stages.front(); }
  std::uint32_t input_dim() const { return stages.front().in_dim; }
  std::uint32_t output_dim() const { return stages.back().out_dim; }
};

// Validates the stage chain. The deployed subset is exactly one linear stage
// followed by one LIF stage; anything else is a ConstructionError.
NetworkSpec BuildSequential(std::vector<LayerSpec> stages, NeuronConfig neurons,
                            EncoderConfig encoder = {});

// Pixel p > 0 spikes once at floor((max - p) * T / (max + 1)); p == 0 is
// silent. Output is sorted by (time, neuron).
std::vector<SpikeEvent> EncodeTtfs(std::span<const std::uint8_t> image,
                                   const EncoderConfig& encoder);
std::vector<SpikeEvent> EncodeTtfs(std::span<const int> image,
                                   const EncoderConfig& encoder);

// Round half away from zero.
double RoundHalfAway(double x);

struct QuantizedNetwork {
  QuantizedWeights weights;  // source-major: rows = in_dim, cols = out_dim
  ThresholdVector thresholds;
};

// Symmetric per-layer INT8: s = max|w| / 127, q = round(w / s) clamped to
// [-127, 127], threshold = round(theta / s). An all-zero layer uses s = 1.
QuantizedNetwork Quantize(const NetworkSpec& net);

struct ExportOptions {
  std::uint32_t num_classes = 10;
  std::uint32_t clock_hz = kDefaultClockHz;
};

// Builds, validates and seals the deployment artifact. Nets that fit the
// fabric are flagged executable; the rest only need to be encodable.
DeploymentArtifact Export(const NetworkSpec& net, const ExportOptions& options = {});

}  // namespace snnaccel

#endif  // SNNACCEL_MODEL_H_
