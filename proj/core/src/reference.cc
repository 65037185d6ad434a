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

#include "snnaccel/reference.h"

#include <algorithm>
#include <string>

#include "snnaccel/errors.h"

namespace snnaccel {
namespace {

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ArithmeticError("membrane accumulator overflow");
  }
  return out;
}

// floor(v * num / den) with overflow detection.
std::int64_t Leak(std::int64_t v, std::int64_t num, std::int64_t den) {
  if (num == den) return v;
  std::int64_t product;
  if (__builtin_mul_overflow(v, num, &product)) {
    throw ArithmeticError("membrane leak overflow");
  }
  std::int64_t q = product / den;
  if ((product % den != 0) && (product < 0)) --q;
  return q;
}

void CheckEvents(const DeploymentArtifact& artifact,
                 std::span<const SpikeEvent> events) {
  for (std::size_t i = 0; i < events.size(); ++i) {
    const SpikeEvent& e = events[i];
    if (e.neuron >= artifact.header.input_count) {
      throw ContractError("event " + std::to_string(i) + " names neuron " +
                          std::to_string(e.neuron) + ", not an input");
    }
    if (e.time >= artifact.header.time_window) {
      throw ContractError("event " + std::to_string(i) + " at t=" +
                          std::to_string(e.time) + " is outside the window");
    }
    if (i > 0 && SpikeBefore(e, events[i - 1])) {
      throw ContractError("events are not sorted by (time, neuron)");
    }
  }
}

}  // namespace

DecodeOutcome DecodeGroupedTtfs(
    std::span<const std::optional<std::uint32_t>> class_first_spikes,
    const DecodeMetadata& decode,
    std::span<const std::uint32_t> spike_counts_at_min) {
  const std::size_t classes =
      std::min<std::size_t>(decode.num_classes, class_first_spikes.size());
  DecodeOutcome out{0, true};
  std::uint32_t best_time = 0;
  std::uint32_t best_count = 0;
  for (std::size_t c = 0; c < classes; ++c) {
    if (!class_first_spikes[c].has_value()) continue;
    const std::uint32_t t = *class_first_spikes[c];
    const std::uint32_t n = c < spike_counts_at_min.size() ? spike_counts_at_min[c] : 0;
    if (out.no_spike || t < best_time || (t == best_time && n > best_count)) {
      out = {static_cast<std::uint32_t>(c), false};
      best_time = t;
      best_count = n;
    }
  }
  return out;
}

ReferenceTrace TraceTtfsReference(const DeploymentArtifact& artifact,
                                  std::span<const SpikeEvent> events) {
  CheckEvents(artifact, events);
  const ArtifactHeader& h = artifact.header;
  const QuantizedWeights& w = artifact.weights;
  const LayerDescriptor* lif = artifact.lif_layer();
  const std::int64_t leak_num = lif ? lif->leak_num : 1;
  const std::int64_t leak_den = lif ? lif->leak_den : 1;
  const std::uint32_t outputs = h.output_count;

  ReferenceTrace trace;
  trace.neurons.resize(outputs);
  std::size_t next = 0;
  for (std::uint32_t t = 0; t < h.time_window; ++t) {
    for (; next < events.size() && events[next].time == t; ++next) {
      const std::uint32_t src = events[next].neuron;
      for (std::uint32_t j = 0; j < outputs; ++j) {
        NeuronState& n = trace.neurons[j];
        if (n.fired) continue;
        n.potential = CheckedAdd(n.potential, w.at(src, j));
      }
    }
    for (std::uint32_t j = 0; j < outputs; ++j) {
      NeuronState& n = trace.neurons[j];
      if (n.fired) continue;
      if (n.potential >= artifact.thresholds.values[j]) {
        n.fired = true;
        n.first_spike = t;
        continue;
      }
      n.potential = Leak(n.potential, leak_num, leak_den);
    }
  }

  const DecodeMetadata& d = artifact.decode;
  InferenceResult& r = trace.result;
  r.class_first_spikes.assign(d.num_classes, std::nullopt);
  std::vector<std::uint32_t> counts(d.num_classes, 0);
  for (std::uint32_t c = 0; c < d.num_classes; ++c) {
    for (std::uint32_t k = 0; k < d.group_size; ++k) {
      const NeuronState& n = trace.neurons[c * d.group_size + k];
      if (!n.first_spike) continue;
      auto& best = r.class_first_spikes[c];
      if (!best || *n.first_spike < *best) {
        best = n.first_spike;
        counts[c] = 1;
      } else if (*n.first_spike == *best) {
        ++counts[c];
      }
    }
  }
  const DecodeOutcome outcome = DecodeGroupedTtfs(r.class_first_spikes, d, counts);
  r.label = outcome.label;
  r.no_spike = outcome.no_spike;
  return trace;
}

InferenceResult RunTtfsReference(const DeploymentArtifact& artifact,
                                 std::span<const SpikeEvent> events) {
  return TraceTtfsReference(artifact, events).result;
}

std::vector<double> DenseScores(const DeploymentArtifact& artifact,
                                std::span<const std::uint8_t> image,
                                DenseMode mode) {
  const QuantizedWeights& w = artifact.weights;
  if (image.size() != w.rows) {
    throw ContractError("image has " + std::to_string(image.size()) +
                        " pixels, dense block expects " + std::to_string(w.rows));
  }
  std::vector<double> y(w.cols, 0.0);
  if (mode == DenseMode::kInt8) {
    std::vector<std::int64_t> acc(w.cols, 0);
    for (std::uint32_t i = 0; i < w.rows; ++i) {
      const std::int64_t x = image[i];
      if (x == 0) continue;
      for (std::uint32_t j = 0; j < w.cols; ++j) acc[j] += x * w.at(i, j);
    }
    std::copy(acc.begin(), acc.end(), y.begin());
    return y;
  }
  std::vector<float> acc(w.cols, 0.0f);
  for (std::uint32_t i = 0; i < w.rows; ++i) {
    if (image[i] == 0) continue;
    const float x = static_cast<float>(image[i]) / 255.0f;
    for (std::uint32_t j = 0; j < w.cols; ++j) {
      acc[j] += (w.scale * static_cast<float>(w.at(i, j))) * x;
    }
  }
  std::copy(acc.begin(), acc.end(), y.begin());
  return y;
}

InferenceResult RunDenseBaseline(const DeploymentArtifact& artifact,
                                 std::span<const std::uint8_t> image,
                                 DenseMode mode) {
  const std::vector<double> y = DenseScores(artifact, image, mode);
  const DecodeMetadata& d = artifact.decode;
  if (static_cast<std::uint64_t>(d.num_classes) * d.group_size != y.size()) {
    throw ContractError("decode metadata does not cover the dense outputs");
  }
  InferenceResult r;
  double best = 0.0;
  for (std::uint32_t c = 0; c < d.num_classes; ++c) {
    const auto group = std::span<const double>(y).subspan(
        static_cast<std::size_t>(c) * d.group_size, d.group_size);
    const double score = *std::max_element(group.begin(), group.end());
    if (c == 0 || score > best) {
      best = score;
      r.label = c;
    }
  }
  r.no_spike = false;
  return r;
}

}  // namespace snnaccel
