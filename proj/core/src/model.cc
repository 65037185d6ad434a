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

#include "snnaccel/model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "snnaccel/errors.h"

namespace snnaccel {
namespace {

template <typename Pixel>
std::vector<SpikeEvent> EncodeImpl(std::span<const Pixel> image,
                                   const EncoderConfig& encoder) {
  if (encoder.time_window < 2) {
    throw EncodingError("time window must be at least 2 steps");
  }
  if (encoder.intensity_max == 0) {
    throw EncodingError("intensity_max must be positive");
  }
  const std::uint64_t max = encoder.intensity_max;
  std::vector<SpikeEvent> events;
  for (std::size_t i = 0; i < image.size(); ++i) {
    const auto p = static_cast<std::int64_t>(image[i]);
    if (p < 0 || static_cast<std::uint64_t>(p) > max) {
      throw EncodingError("pixel " + std::to_string(i) + " intensity " +
                          std::to_string(p) + " outside [0, " +
                          std::to_string(max) + "]");
    }
    if (p == 0) continue;
    const std::uint64_t t =
        (max - static_cast<std::uint64_t>(p)) * encoder.time_window / (max + 1);
    events.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(t)});
  }
  std::stable_sort(events.begin(), events.end(), SpikeBefore);
  return events;
}

}  // namespace

LayerSpec LayerSpec::Linear(std::uint32_t in_dim, std::uint32_t out_dim,
                            std::vector<float> weights) {
  return {LayerKind::kLinear, in_dim, out_dim, std::move(weights)};
}

LayerSpec LayerSpec::Lif(std::uint32_t dim) {
  return {LayerKind::kLif, dim, dim, {}};
}

NetworkSpec BuildSequential(std::vector<LayerSpec> stages, NeuronConfig neurons,
                            EncoderConfig encoder) {
  if (stages.empty()) throw ConstructionError("network has no stages");
  for (std::size_t i = 1; i < stages.size(); ++i) {
    if (stages[i].in_dim != stages[i - 1].out_dim) {
      throw ConstructionError("stage " + std::to_string(i) + " expects " +
                              std::to_string(stages[i].in_dim) +
                              " inputs but stage " + std::to_string(i - 1) +
                              " produces " +
                              std::to_string(stages[i - 1].out_dim));
    }
  }
  if (stages.back().kind != LayerKind::kLif) {
    throw ConstructionError("TTFS output must be a spiking (lif) stage");
  }
  if (stages.size() != 2 || stages[0].kind != LayerKind::kLinear) {
    throw ConstructionError(
        "only a single linear stage followed by one lif stage is supported");
  }
  const LayerSpec& linear = stages[0];
  const LayerSpec& lif = stages[1];
  if (linear.in_dim == 0 || linear.out_dim == 0) {
    throw ConstructionError("linear stage dimensions must be positive");
  }
  if (linear.weights.size() !=
      static_cast<std::size_t>(linear.in_dim) * linear.out_dim) {
    throw ConstructionError("linear weights must be out_dim x in_dim");
  }
  if (lif.in_dim != lif.out_dim) {
    throw ConstructionError("lif stage must preserve its width");
  }
  if (neurons.thresholds.size() != lif.out_dim) {
    throw ConstructionError("need one threshold per lif neuron");
  }
  for (double theta : neurons.thresholds) {
    if (!std::isfinite(theta) || theta <= 0.0) {
      throw ConstructionError("thresholds must be finite and positive");
    }
  }
  if (neurons.leak_den == 0 || neurons.leak_num > neurons.leak_den) {
    throw ConstructionError("leak must satisfy 0 <= num <= den, den > 0");
  }
  if (!neurons.fire_once) {
    throw ConstructionError("TTFS neurons must be fire-once");
  }
  if (encoder.time_window < 2 || encoder.intensity_max == 0) {
    throw ConstructionError("encoder needs T >= 2 and a positive intensity max");
  }
  return NetworkSpec{std::move(stages), std::move(neurons), encoder};
}

std::vector<SpikeEvent> EncodeTtfs(std::span<const std::uint8_t> image,
                                   const EncoderConfig& encoder) {
  return EncodeImpl(image, encoder);
}

std::vector<SpikeEvent> EncodeTtfs(std::span<const int> image,
                                   const EncoderConfig& encoder) {
  return EncodeImpl(image, encoder);
}

double RoundHalfAway(double x) { return std::round(x); }

QuantizedNetwork Quantize(const NetworkSpec& net) {
  const LayerSpec& linear = net.linear();
  double max_abs = 0.0;
  for (float w : linear.weights) {
    if (!std::isfinite(w)) throw QuantizationError("non-finite weight");
    max_abs = std::max(max_abs, std::abs(static_cast<double>(w)));
  }
  const double scale = max_abs > 0.0 ? max_abs / 127.0 : 1.0;

  QuantizedNetwork out;
  out.weights.rows = linear.in_dim;
  out.weights.cols = linear.out_dim;
  out.weights.scale = static_cast<float>(scale);
  out.weights.values.resize(linear.weights.size());
  for (std::uint32_t o = 0; o < linear.out_dim; ++o) {
    for (std::uint32_t i = 0; i < linear.in_dim; ++i) {
      const double w = linear.weights[static_cast<std::size_t>(o) * linear.in_dim + i];
      const double q = std::clamp(RoundHalfAway(w / scale), -127.0, 127.0);
      out.weights.values[static_cast<std::size_t>(i) * linear.out_dim + o] =
          static_cast<std::int8_t>(q);
    }
  }

  out.thresholds.values.reserve(net.neurons.thresholds.size());
  for (double theta : net.neurons.thresholds) {
    if (!std::isfinite(theta)) throw QuantizationError("non-finite threshold");
    const double q = RoundHalfAway(theta / scale);
    if (q > std::numeric_limits<std::int32_t>::max()) {
      throw QuantizationError("threshold overflows the 32-bit accumulator domain");
    }
    // A threshold that rounds to zero would fire on silence.
    out.thresholds.values.push_back(static_cast<std::int32_t>(std::max(1.0, q)));
  }
  return out;
}

DeploymentArtifact Export(const NetworkSpec& net, const ExportOptions& options) {
  const std::uint32_t in_dim = net.input_dim();
  const std::uint32_t out_dim = net.output_dim();
  if (options.num_classes == 0 || out_dim % options.num_classes != 0) {
    throw ValidationError("decode: " + std::to_string(out_dim) +
                          " output neurons cannot form " +
                          std::to_string(options.num_classes) +
                          " equal class groups");
  }
  QuantizedNetwork q = Quantize(net);

  DeploymentArtifact a;
  a.header.input_count = in_dim;
  a.header.output_count = out_dim;
  a.header.total_neurons = in_dim + out_dim;
  a.header.time_window = net.encoder.time_window;
  a.header.clock_hz = options.clock_hz;
  a.header.flags = kFlagEncodable;

  a.layers.push_back({LayerKind::kLinear, in_dim, out_dim, 1, 1, true});
  a.layers.push_back({LayerKind::kLif, out_dim, out_dim, net.neurons.leak_num,
                      net.neurons.leak_den, net.neurons.fire_once});

  a.connectivity.descriptors.resize(in_dim);
  for (std::uint32_t src = 0; src < in_dim; ++src) {
    SynapseDescriptor& d = a.connectivity.descriptors[src];
    d.offset = static_cast<std::uint32_t>(a.connectivity.synapses.size());
    for (std::uint32_t col = 0; col < out_dim; ++col) {
      const std::int8_t w = q.weights.at(src, col);
      if (w == 0) continue;
      const std::uint32_t target = in_dim + col;
      if (target > 0xFFFFu) {
        throw ValidationError("connectivity: target id " +
                              std::to_string(target) +
                              " does not fit the 16-bit target field");
      }
      a.connectivity.synapses.push_back(
          {static_cast<std::uint16_t>(target), w, 0});
    }
    const std::size_t count = a.connectivity.synapses.size() - d.offset;
    if (count > 0xFFFFu) {
      throw ValidationError("connectivity: fan-out of source " +
                            std::to_string(src) + " exceeds 65535");
    }
    d.count = static_cast<std::uint16_t>(count);
  }
  a.weights = std::move(q.weights);
  a.thresholds = std::move(q.thresholds);
  a.decode = {options.num_classes, out_dim / options.num_classes, in_dim};

  a.header.flags = kFlagEncodable | kFlagExecutable;
  if (!ValidateArtifact(a, ValidationLevel::kExecutable).ok()) {
    a.header.flags = kFlagEncodable;
  }
  RequireValid(a, ValidationLevel::kEncodable);
  return SealArtifact(std::move(a));
}

}  // namespace snnaccel
