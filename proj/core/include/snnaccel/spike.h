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

#ifndef SNNACCEL_SPIKE_H_
#define SNNACCEL_SPIKE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace snnaccel {

// A logical spike: `neuron` fired during time step `time`.
struct SpikeEvent {
  std::uint32_t neuron = 0;
  std::uint32_t time = 0;

  bool operator==(const SpikeEvent&) const = default;
};

// Canonical event order: by time step, then neuron id.
inline bool SpikeBefore(const SpikeEvent& a, const SpikeEvent& b) {
  return a.time != b.time ? a.time < b.time : a.neuron < b.neuron;
}

struct CycleCounters {
  std::uint64_t first_spike_cycles = 0;
  std::uint64_t service_cycles = 0;
  std::uint64_t total_cycles = 0;
  std::uint64_t events_routed = 0;

  bool operator==(const CycleCounters&) const = default;
};

struct InferenceResult {
  std::uint32_t label = 0;
  // Earliest first-spike time step of each class group, if any neuron fired.
  std::vector<std::optional<std::uint32_t>> class_first_spikes;
  bool no_spike = false;
  std::optional<CycleCounters> counters;

  // Prediction-level identity used by equivalence checks.
  bool SamePrediction(const InferenceResult& other) const {
    return label == other.label && no_spike == other.no_spike;
  }
  bool SameDecode(const InferenceResult& other) const {
    return SamePrediction(other) &&
           class_first_spikes == other.class_first_spikes;
  }
};

}  // namespace snnaccel

#endif  // SNNACCEL_SPIKE_H_
