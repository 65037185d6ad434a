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

// Event-driven model of the accelerator fabric: an event router that looks
// up each input spike's connectivity descriptor, 16 core groups of 128
// integer LIF lanes, a streaming grouped TTFS decoder and cycle counters.
//
// The simulator reads only the packed connectivity (CONN) of the artifact,
// never the dense weight block.

#ifndef SNNACCEL_ACCEL_H_
#define SNNACCEL_ACCEL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "snnaccel/artifact.h"
#include "snnaccel/spike.h"

namespace snnaccel {

// 32-bit event word:
//   [31:28] group  [27:21] lane  [20:8] time step  [7:1] reserved  [0] dir
// dir is 0 for input spikes and 1 for output spikes.
class EventPacket {
 public:
  enum class Direction : std::uint32_t { kInput = 0, kOutput = 1 };

  constexpr EventPacket() = default;
  constexpr explicit EventPacket(std::uint32_t word) : word_(word) {}

  // Throws PackingError when a field does not fit.
  static EventPacket Make(std::uint32_t group, std::uint32_t lane,
                          std::uint32_t time, Direction dir);

  constexpr std::uint32_t word() const { return word_; }
  constexpr std::uint32_t group() const { return word_ >> 28; }
  constexpr std::uint32_t lane() const { return (word_ >> 21) & 0x7Fu; }
  constexpr std::uint32_t time() const { return (word_ >> 8) & 0x1FFFu; }
  constexpr std::uint32_t reserved() const { return (word_ >> 1) & 0x7Fu; }
  constexpr Direction direction() const {
    return static_cast<Direction>(word_ & 1u);
  }
  constexpr std::uint32_t neuron() const { return group() * 128 + lane(); }

  bool operator==(const EventPacket&) const = default;

 private:
  std::uint32_t word_ = 0;
};

std::vector<EventPacket> PackEvents(std::span<const SpikeEvent> events);
std::vector<SpikeEvent> UnpackEvents(std::span<const EventPacket> packets);

enum class CycleMode {
  // Report the configured fill/service constants of the deployed design.
  kDeployed,
  // Count simulated cycles: one per active core group per occupied step.
  kMeasured,
};

struct AccelConfig {
  std::uint32_t num_groups = 16;
  std::uint32_t group_size = 128;
  std::uint32_t pipeline_fill_cycles = 12;
  std::uint32_t service_interval_cycles = 11;
  std::uint32_t clock_hz = kDefaultClockHz;
  // 31.6 nJ per image over a 0.1375 us service interval.
  double dynamic_power_w = 0.2298;
  CycleMode cycle_mode = CycleMode::kDeployed;
};

struct AcceleratorRun {
  InferenceResult result;  // counters always populated
  // Output spikes in the order the decoder consumed them: (time, group, lane).
  std::vector<EventPacket> output_stream;
};

// A fabric loaded with one artifact. Construction validates the artifact at
// executable level, except for the dense-copy rule: the fabric is programmed
// from CONN alone and never sees WGHT. Throws ValidationError.
class Accelerator {
 public:
  explicit Accelerator(const DeploymentArtifact& artifact,
                       const AccelConfig& config = {});

  // Packets must be input packets sorted by time step; anything else raises
  // RoutingError.
  AcceleratorRun Trace(std::span<const EventPacket> packets) const;
  InferenceResult Run(std::span<const EventPacket> packets) const {
    return Trace(packets).result;
  }

  const AccelConfig& config() const { return config_; }
  const DeploymentArtifact& artifact() const { return *artifact_; }

 private:
  const DeploymentArtifact* artifact_;
  AccelConfig config_;
  std::int64_t leak_num_ = 1;
  std::int64_t leak_den_ = 1;
};

AcceleratorRun TraceAccelerator(const DeploymentArtifact& artifact,
                                std::span<const EventPacket> packets,
                                const AccelConfig& config = {});
InferenceResult RunAccelerator(const DeploymentArtifact& artifact,
                               std::span<const EventPacket> packets,
                               const AccelConfig& config = {});

struct BatchRun {
  std::vector<InferenceResult> results;
  // total = fill + sum of per-image service cycles; service_cycles is the
  // steady-state per-image cost (rounded up); first_spike_cycles is the
  // stream's first output.
  CycleCounters aggregate;
};

BatchRun StreamBatch(const DeploymentArtifact& artifact,
                     std::span<const std::vector<EventPacket>> images,
                     const AccelConfig& config = {});

// Folds per-image counters in stream order into the batch aggregate above.
CycleCounters AggregateCycles(std::span<const InferenceResult> results,
                              const AccelConfig& config = {});

double CyclesToLatency(std::uint64_t cycles, std::uint32_t clock_hz);
double Throughput(std::uint64_t service_cycles, std::uint32_t clock_hz);
double EstimateEnergy(double latency_s, double dynamic_power_w);

}  // namespace snnaccel

#endif  // SNNACCEL_ACCEL_H_
