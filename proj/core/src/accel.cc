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

#include "snnaccel/accel.h"

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <cstdio>
#include <optional>
#include <string>

#include "snnaccel/errors.h"

namespace snnaccel {
namespace {

constexpr std::uint32_t kGroups = 16;
constexpr std::uint32_t kLanes = 128;

// One 128-lane core group. Lanes leak lazily: `synced` is the step whose
// start the stored potential describes, so idle lanes cost nothing.
class CoreGroup {
 public:
  void Deliver(std::uint32_t lane, std::int8_t weight, std::uint32_t step,
               std::int64_t leak_num, std::int64_t leak_den) {
    if (fired_[lane]) return;
    CatchUp(lane, step, leak_num, leak_den);
    if (__builtin_add_overflow(potential_[lane], weight, &potential_[lane])) {
      throw ArithmeticError("lane accumulator overflow");
    }
    touched_.set(lane);
  }

  // End-of-step update for lanes that received input this step. Fired lanes
  // freeze; the rest take this step's leak. Calls emit(lane) in lane order.
  template <typename Emit>
  void Settle(std::uint32_t step, std::span<const std::int32_t> thresholds,
              std::int64_t leak_num, std::int64_t leak_den, Emit&& emit) {
    for (std::uint32_t lane = 0; lane < kLanes; ++lane) {
      if (!touched_[lane]) continue;
      if (potential_[lane] >= thresholds[lane]) {
        fired_.set(lane);
        emit(lane);
      } else {
        potential_[lane] = LeakOnce(potential_[lane], leak_num, leak_den);
        synced_[lane] = step + 1;
      }
    }
    touched_.reset();
  }

 private:
  static std::int64_t LeakOnce(std::int64_t v, std::int64_t num,
                               std::int64_t den) {
    std::int64_t product;
    if (__builtin_mul_overflow(v, num, &product)) {
      throw ArithmeticError("lane leak overflow");
    }
    std::int64_t q = product / den;
    if (product % den != 0 && product < 0) --q;
    return q;
  }

  void CatchUp(std::uint32_t lane, std::uint32_t step, std::int64_t leak_num,
               std::int64_t leak_den) {
    if (leak_num == leak_den) {
      synced_[lane] = step;
      return;
    }
    std::int64_t v = potential_[lane];
    for (std::uint32_t s = synced_[lane]; s < step; ++s) {
      const std::int64_t next = LeakOnce(v, leak_num, leak_den);
      if (next == v) break;  // fixed point (0 or -1 under floor)
      v = next;
    }
    potential_[lane] = v;
    synced_[lane] = step;
  }

  std::array<std::int64_t, kLanes> potential_{};
  std::array<std::uint32_t, kLanes> synced_{};
  std::bitset<kLanes> fired_;
  std::bitset<kLanes> touched_;
};

// Streaming grouped TTFS readout fed by output packets in arrival order.
class GroupedDecoder {
 public:
  explicit GroupedDecoder(const DecodeMetadata& decode)
      : decode_(decode), first_(decode.num_classes), count_(decode.num_classes, 0) {}

  void Consume(const EventPacket& packet) {
    const std::uint32_t cls = decode_.class_of(packet.neuron());
    if (!first_[cls]) {
      first_[cls] = packet.time();
      count_[cls] = 1;
    } else if (*first_[cls] == packet.time()) {
      ++count_[cls];
    }
  }

  void Finish(InferenceResult& out) const {
    out.class_first_spikes = first_;
    out.no_spike = true;
    out.label = 0;
    for (std::uint32_t c = 0; c < decode_.num_classes; ++c) {
      if (!first_[c]) continue;
      if (out.no_spike) {
        out.no_spike = false;
        out.label = c;
        continue;
      }
      const std::uint32_t best = out.label;
      const bool earlier = *first_[c] < *first_[best];
      const bool more = *first_[c] == *first_[best] && count_[c] > count_[best];
      if (earlier || more) out.label = c;
    }
  }

 private:
  DecodeMetadata decode_;
  std::vector<std::optional<std::uint32_t>> first_;
  std::vector<std::uint32_t> count_;
};

void CheckConfig(const AccelConfig& c) {
  if (c.num_groups != kGroups || c.group_size != kLanes) {
    throw ValidationError("fabric geometry must be 16 groups x 128 lanes");
  }
  if (c.pipeline_fill_cycles == 0 || c.service_interval_cycles == 0 ||
      c.clock_hz == 0) {
    throw ValidationError("cycle constants and clock must be positive");
  }
  if (!(c.dynamic_power_w >= 0.0)) {
    throw ValidationError("dynamic power must be non-negative");
  }
}

}  // namespace

EventPacket EventPacket::Make(std::uint32_t group, std::uint32_t lane,
                              std::uint32_t time, Direction dir) {
  if (group >= kGroups) {
    throw PackingError("group " + std::to_string(group) + " exceeds 4 bits");
  }
  if (lane >= kLanes) {
    throw PackingError("lane " + std::to_string(lane) + " exceeds 7 bits");
  }
  if (time >= kMaxTimeWindow) {
    throw PackingError("time step " + std::to_string(time) + " exceeds 13 bits");
  }
  return EventPacket((group << 28) | (lane << 21) | (time << 8) |
                     static_cast<std::uint32_t>(dir));
}

std::vector<EventPacket> PackEvents(std::span<const SpikeEvent> events) {
  std::vector<EventPacket> packets;
  packets.reserve(events.size());
  for (const SpikeEvent& e : events) {
    if (e.neuron >= kGroups * kLanes) {
      throw PackingError("neuron " + std::to_string(e.neuron) +
                         " is outside the 2048-lane address space");
    }
    packets.push_back(EventPacket::Make(e.neuron / kLanes, e.neuron % kLanes,
                                        e.time, EventPacket::Direction::kInput));
  }
  return packets;
}

std::vector<SpikeEvent> UnpackEvents(std::span<const EventPacket> packets) {
  std::vector<SpikeEvent> events;
  events.reserve(packets.size());
  for (const EventPacket& p : packets) events.push_back({p.neuron(), p.time()});
  return events;
}

Accelerator::Accelerator(const DeploymentArtifact& artifact,
                         const AccelConfig& config)
    : artifact_(&artifact), config_(config) {
  CheckConfig(config_);
  ValidationReport report = ValidateArtifact(artifact, ValidationLevel::kExecutable);
  std::erase_if(report.issues, [](const ValidationIssue& i) {
    return i.rule == rules::kDenseCopy;
  });
  if (!report.ok()) throw ValidationError(report.ToString());
  if (const LayerDescriptor* lif = artifact.lif_layer()) {
    leak_num_ = lif->leak_num;
    leak_den_ = lif->leak_den;
  }
}

AcceleratorRun Accelerator::Trace(std::span<const EventPacket> packets) const {
  const DeploymentArtifact& a = *artifact_;
  const std::uint32_t input_count = a.header.input_count;

  // Thresholds laid out per lane; non-output lanes never receive input.
  std::array<std::array<std::int32_t, kLanes>, kGroups> lane_thresholds{};
  for (std::uint32_t j = 0; j < a.header.output_count; ++j) {
    const std::uint32_t id = input_count + j;
    lane_thresholds[id / kLanes][id % kLanes] = a.thresholds.values[j];
  }

  std::array<CoreGroup, kGroups> groups;
  GroupedDecoder decoder(a.decode);
  AcceleratorRun run;
  CycleCounters& counters = run.result.counters.emplace();

  std::uint64_t stream_cycles = 0;
  std::optional<std::uint64_t> first_spike_offset;

  std::size_t i = 0;
  while (i < packets.size()) {
    const std::uint32_t step = packets[i].time();
    if (step >= a.header.time_window) {
      throw RoutingError("packet time " + std::to_string(step) +
                         " is outside the time window");
    }
    std::uint32_t active_groups = 0;
    for (; i < packets.size() && packets[i].time() == step; ++i) {
      const EventPacket& p = packets[i];
      if (p.direction() != EventPacket::Direction::kInput || p.reserved() != 0) {
        throw RoutingError("malformed input packet 0x" + [&] {
          char buf[9];
          std::snprintf(buf, sizeof(buf), "%08x", p.word());
          return std::string(buf);
        }());
      }
      const std::uint32_t src = p.neuron();
      if (src >= input_count) {
        throw RoutingError("packet source " + std::to_string(src) +
                           " is not an input neuron");
      }
      const auto fanout = a.connectivity.fanout(src);
      if (!fanout.empty()) ++counters.events_routed;
      for (const PackedSynapse& s : fanout) {
        groups[s.group()].Deliver(s.lane(), s.weight, step, leak_num_, leak_den_);
        active_groups |= 1u << s.group();
      }
    }
    if (i < packets.size() && packets[i].time() < step) {
      throw RoutingError("packets are not sorted by time step");
    }

    bool fired_this_step = false;
    for (std::uint32_t g = 0; g < kGroups; ++g) {
      if ((active_groups & (1u << g)) == 0) continue;
      groups[g].Settle(step, lane_thresholds[g], leak_num_, leak_den_,
                       [&](std::uint32_t lane) {
                         const EventPacket out = EventPacket::Make(
                             g, lane, step, EventPacket::Direction::kOutput);
                         run.output_stream.push_back(out);
                         decoder.Consume(out);
                         fired_this_step = true;
                       });
    }
    if (fired_this_step && !first_spike_offset) first_spike_offset = stream_cycles;
    stream_cycles += std::max(1, std::popcount(active_groups));
  }

  decoder.Finish(run.result);

  const std::uint64_t fill = config_.pipeline_fill_cycles;
  if (config_.cycle_mode == CycleMode::kDeployed) {
    counters.service_cycles = config_.service_interval_cycles;
    counters.first_spike_cycles = first_spike_offset ? fill : 0;
  } else {
    counters.service_cycles = std::max<std::uint64_t>(1, stream_cycles);
    counters.first_spike_cycles = first_spike_offset ? fill + *first_spike_offset : 0;
  }
  counters.total_cycles = fill + counters.service_cycles;
  return run;
}

AcceleratorRun TraceAccelerator(const DeploymentArtifact& artifact,
                                std::span<const EventPacket> packets,
                                const AccelConfig& config) {
  return Accelerator(artifact, config).Trace(packets);
}

InferenceResult RunAccelerator(const DeploymentArtifact& artifact,
                               std::span<const EventPacket> packets,
                               const AccelConfig& config) {
  return Accelerator(artifact, config).Run(packets);
}

CycleCounters AggregateCycles(std::span<const InferenceResult> results,
                              const AccelConfig& config) {
  if (results.empty()) throw ContractError("stream needs at least one image");
  CycleCounters agg;
  std::uint64_t service_sum = 0;
  std::optional<std::uint64_t> first_spike;
  for (const InferenceResult& r : results) {
    if (!r.counters) throw ContractError("result carries no cycle counters");
    const CycleCounters& c = *r.counters;
    if (!first_spike && c.first_spike_cycles > 0) {
      first_spike = service_sum + c.first_spike_cycles;
    }
    service_sum += c.service_cycles;
    agg.events_routed += c.events_routed;
  }
  const std::uint64_t n = results.size();
  agg.total_cycles = config.pipeline_fill_cycles + service_sum;
  agg.service_cycles = (service_sum + n - 1) / n;
  agg.first_spike_cycles = first_spike.value_or(0);
  return agg;
}

BatchRun StreamBatch(const DeploymentArtifact& artifact,
                     std::span<const std::vector<EventPacket>> images,
                     const AccelConfig& config) {
  if (images.empty()) throw ContractError("stream needs at least one image");
  const Accelerator accel(artifact, config);
  BatchRun batch;
  batch.results.reserve(images.size());
  for (const auto& packets : images) batch.results.push_back(accel.Run(packets));
  batch.aggregate = AggregateCycles(batch.results, config);
  return batch;
}

double CyclesToLatency(std::uint64_t cycles, std::uint32_t clock_hz) {
  if (clock_hz == 0) throw ContractError("clock frequency must be positive");
  return static_cast<double>(cycles) / static_cast<double>(clock_hz);
}

double Throughput(std::uint64_t service_cycles, std::uint32_t clock_hz) {
  if (service_cycles == 0) throw ContractError("service cycles must be positive");
  return static_cast<double>(clock_hz) / static_cast<double>(service_cycles);
}

double EstimateEnergy(double latency_s, double dynamic_power_w) {
  if (latency_s < 0.0 || dynamic_power_w < 0.0) {
    throw ContractError("latency and power must be non-negative");
  }
  return latency_s * dynamic_power_w;
}

}  // namespace snnaccel
