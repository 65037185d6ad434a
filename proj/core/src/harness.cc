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

#include "snnaccel/harness.h"

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>

#include "snnaccel/errors.h"
#include "snnaccel/model.h"
#include "snnaccel/parallel.h"
#include "snnaccel/reference.h"
#include "snnaccel/trainer.h"

namespace snnaccel {

namespace {

using Clock = std::chrono::steady_clock;

double ElapsedMs(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void CheckDataset(const DeploymentArtifact& artifact, const Dataset& dataset) {
  if (dataset.size() == 0) throw ContractError("dataset is empty");
  if (dataset.image_size() != artifact.header.input_count) {
    throw ContractError("images have " + std::to_string(dataset.image_size()) +
                        " pixels but the artifact expects " +
                        std::to_string(artifact.header.input_count) + " inputs");
  }
}

EncoderConfig EncoderOf(const DeploymentArtifact& artifact) {
  EncoderConfig encoder;
  encoder.time_window = artifact.header.time_window;
  return encoder;
}

double Percent(std::size_t k, std::size_t n) {
  return 100.0 * static_cast<double>(k) / static_cast<double>(n);
}

}  // namespace

EquivalenceReport VerifyEquivalence(const DeploymentArtifact& artifact,
                                    const Dataset& dataset,
                                    const AccelConfig& config, unsigned jobs) {
  return VerifyEquivalence(artifact, artifact, dataset, config, jobs);
}

EquivalenceReport VerifyEquivalence(const DeploymentArtifact& reference_side,
                                    const DeploymentArtifact& accelerator_side,
                                    const Dataset& dataset,
                                    const AccelConfig& config, unsigned jobs) {
  CheckDataset(reference_side, dataset);
  CheckDataset(accelerator_side, dataset);
  const Accelerator accel(accelerator_side, config);
  const EncoderConfig encoder = EncoderOf(reference_side);

  std::vector<InferenceResult> ref(dataset.size());
  std::vector<InferenceResult> acc(dataset.size());
  ParallelFor(dataset.size(), jobs, [&](std::size_t i) {
    const std::vector<SpikeEvent> events = EncodeTtfs(dataset.image(i), encoder);
    ref[i] = RunTtfsReference(reference_side, events);
    acc[i] = accel.Run(PackEvents(events));
  });

  EquivalenceReport report;
  report.n = dataset.size();
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (ref[i].SamePrediction(acc[i])) {
      ++report.matches;
    } else {
      report.mismatches.push_back(
          {i, ref[i].label, ref[i].no_spike, acc[i].label, acc[i].no_spike});
    }
  }
  return report;
}

std::vector<InferenceResult> RunBackend(const DeploymentArtifact& artifact,
                                        const Dataset& dataset, Backend backend,
                                        const AccelConfig& config, unsigned jobs) {
  CheckDataset(artifact, dataset);
  std::optional<Accelerator> accel;
  if (backend == Backend::kAccel) accel.emplace(artifact, config);
  const EncoderConfig encoder = EncoderOf(artifact);

  std::vector<InferenceResult> out(dataset.size());
  ParallelFor(dataset.size(), jobs, [&](std::size_t i) {
    const auto image = dataset.image(i);
    switch (backend) {
      case Backend::kReference:
        out[i] = RunTtfsReference(artifact, EncodeTtfs(image, encoder));
        break;
      case Backend::kAccel:
        out[i] = accel->Run(PackEvents(EncodeTtfs(image, encoder)));
        break;
      case Backend::kDenseFp32:
        out[i] = RunDenseBaseline(artifact, image, DenseMode::kFp32);
        break;
      case Backend::kDenseInt8:
        out[i] = RunDenseBaseline(artifact, image, DenseMode::kInt8);
        break;
    }
  });
  return out;
}

EvalReport Evaluate(const DeploymentArtifact& artifact, const Dataset& dataset,
                    const AccelConfig& config, const EvalOptions& options) {
  CheckDataset(artifact, dataset);
  const Accelerator accel(artifact, config);
  const EncoderConfig encoder = EncoderOf(artifact);
  const std::size_t n = dataset.size();

  std::vector<InferenceResult> acc(n);
  std::vector<InferenceResult> ref(n);
  std::vector<std::uint32_t> fp32(n);
  std::vector<std::uint32_t> int8(n);
  std::vector<double> ref_ms(n);
  std::vector<double> fp32_ms(n);
  std::vector<double> int8_ms(n);
  ParallelFor(n, options.jobs, [&](std::size_t i) {
    const auto image = dataset.image(i);
    auto start = Clock::now();
    const std::vector<SpikeEvent> events = EncodeTtfs(image, encoder);
    ref[i] = RunTtfsReference(artifact, events);
    ref_ms[i] = ElapsedMs(start);

    acc[i] = accel.Run(PackEvents(events));

    start = Clock::now();
    fp32[i] = RunDenseBaseline(artifact, image, DenseMode::kFp32).label;
    fp32_ms[i] = ElapsedMs(start);
    start = Clock::now();
    int8[i] = RunDenseBaseline(artifact, image, DenseMode::kInt8).label;
    int8_ms[i] = ElapsedMs(start);
  });

  EvalReport report;
  report.n = n;
  std::size_t fp32_correct = 0;
  std::size_t int8_correct = 0;
  double ref_total = 0.0, fp32_total = 0.0, int8_total = 0.0;
  report.predictions.reserve(n);
  report.no_spike_flags.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t label = dataset.labels[i];
    report.correct += acc[i].label == label;
    report.reference_correct += ref[i].label == label;
    report.equivalent += acc[i].SamePrediction(ref[i]);
    report.no_spike += acc[i].no_spike;
    fp32_correct += fp32[i] == label;
    int8_correct += int8[i] == label;
    ref_total += ref_ms[i];
    fp32_total += fp32_ms[i];
    int8_total += int8_ms[i];
    report.predictions.push_back(acc[i].label);
    report.no_spike_flags.push_back(acc[i].no_spike);
  }
  report.accuracy_pct = Percent(report.correct, n);
  report.reference_accuracy_pct = Percent(report.reference_correct, n);
  report.dense_fp32_accuracy_pct = Percent(fp32_correct, n);
  report.dense_int8_accuracy_pct = Percent(int8_correct, n);

  report.cycles = AggregateCycles(acc, config);
  const double latency_s = CyclesToLatency(report.cycles.service_cycles, config.clock_hz);
  report.latency_us = latency_s * 1e6;
  report.throughput_img_s = Throughput(report.cycles.service_cycles, config.clock_hz);
  report.energy_nj = EstimateEnergy(latency_s, config.dynamic_power_w) * 1e9;

  report.rows.push_back({kPlatformAccel, report.accuracy_pct, report.latency_us,
                         report.throughput_img_s, report.energy_nj});
  auto software_row = [&](const char* name, double accuracy, double total_ms) {
    PlatformRow row{name, accuracy, std::nullopt, std::nullopt, std::nullopt};
    if (options.time_software) {
      const double per_image_ms = total_ms / static_cast<double>(n);
      row.latency_us = per_image_ms * 1e3;
      if (per_image_ms > 0.0) row.throughput_img_s = 1e3 / per_image_ms;
    }
    return row;
  };
  report.rows.push_back(
      software_row(kPlatformReference, report.reference_accuracy_pct, ref_total));
  report.rows.push_back(
      software_row(kPlatformDenseFp32, report.dense_fp32_accuracy_pct, fp32_total));
  report.rows.push_back(
      software_row(kPlatformDenseInt8, report.dense_int8_accuracy_pct, int8_total));
  return report;
}

std::vector<SpikeEvent> SpikeDrop(std::span<const SpikeEvent> events, double p,
                                  std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ContractError("drop probability must lie in [0, 1]");
  }
  std::vector<SpikeEvent> kept;
  kept.reserve(events.size());
  std::uint64_t state = seed;
  for (const SpikeEvent& ev : events) {
    const double u = static_cast<double>(SplitMix64(state) >> 11) * 0x1.0p-53;
    if (u >= p) kept.push_back(ev);
  }
  return kept;
}

std::uint64_t ImageSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed ^ (index * 0xD1B54A32D192ED03ull);
  return SplitMix64(state);
}

RobustnessReport RobustnessSweep(const DeploymentArtifact& artifact,
                                 const Dataset& dataset,
                                 std::span<const double> ratios,
                                 std::uint64_t seed, const AccelConfig& config,
                                 unsigned jobs) {
  CheckDataset(artifact, dataset);
  const Accelerator accel(artifact, config);
  const EncoderConfig encoder = EncoderOf(artifact);

  RobustnessReport report;
  report.seed = seed;
  report.n = dataset.size();
  for (double ratio : ratios) {
    std::vector<std::uint8_t> hit(dataset.size());
    ParallelFor(dataset.size(), jobs, [&](std::size_t i) {
      const std::vector<SpikeEvent> events = EncodeTtfs(dataset.image(i), encoder);
      const std::vector<SpikeEvent> kept = SpikeDrop(events, ratio, ImageSeed(seed, i));
      hit[i] = accel.Run(PackEvents(kept)).label == dataset.labels[i];
    });
    RobustnessPoint point;
    point.ratio = ratio;
    for (std::uint8_t h : hit) point.correct += h;
    point.accuracy_pct = Percent(point.correct, dataset.size());
    report.points.push_back(point);
  }
  return report;
}

RepeatabilityReport Repeatability(const DeploymentArtifact& artifact,
                                  const Dataset& dataset, std::size_t runs,
                                  const AccelConfig& config, unsigned jobs) {
  CheckDataset(artifact, dataset);
  const EncoderConfig encoder = EncoderOf(artifact);
  const std::size_t n = dataset.size();

  std::vector<std::vector<EventPacket>> packets(n);
  std::vector<InferenceResult> ref(n);
  ParallelFor(n, jobs, [&](std::size_t i) {
    const std::vector<SpikeEvent> events = EncodeTtfs(dataset.image(i), encoder);
    ref[i] = RunTtfsReference(artifact, events);
    packets[i] = PackEvents(events);
  });

  RepeatabilityReport report;
  report.runs = runs;
  report.n = n;
  report.pairs = runs * n;
  for (std::size_t r = 0; r < runs; ++r) {
    const Accelerator accel(artifact, config);
    std::vector<InferenceResult> acc(n);
    ParallelFor(n, jobs, [&](std::size_t i) { acc[i] = accel.Run(packets[i]); });
    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
      report.mismatches += !acc[i].SamePrediction(ref[i]);
      correct += acc[i].label == dataset.labels[i];
    }
    report.accuracy_pct.push_back(Percent(correct, n));
  }
  return report;
}

ScopeBreakdown ScopeProfile(const DeploymentArtifact& artifact,
                            const Dataset& dataset, const AccelConfig& config) {
  CheckDataset(artifact, dataset);
  const EncoderConfig encoder = EncoderOf(artifact);
  const Accelerator accel(artifact, config);

  const DecodeMetadata& decode = artifact.decode;
  std::vector<std::optional<std::uint32_t>> first(decode.num_classes);
  std::vector<std::uint32_t> counts(decode.num_classes);
  double packing = 0.0, reference = 0.0, run = 0.0, readback = 0.0;
  std::size_t matches = 0;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    auto t = Clock::now();
    const std::vector<SpikeEvent> events = EncodeTtfs(dataset.image(i), encoder);
    const std::vector<EventPacket> packets = PackEvents(events);
    packing += ElapsedMs(t);

    t = Clock::now();
    const InferenceResult expected = RunTtfsReference(artifact, events);
    reference += ElapsedMs(t);

    t = Clock::now();
    const AcceleratorRun out = accel.Trace(packets);
    run += ElapsedMs(t);

    // Host readback: rebuild per-class first spikes from the returned output
    // stream, decode the class and compare it with the reference.
    t = Clock::now();
    std::fill(first.begin(), first.end(), std::nullopt);
    std::fill(counts.begin(), counts.end(), 0u);
    for (const SpikeEvent& s : UnpackEvents(out.output_stream)) {
      const std::uint32_t c = decode.class_of(s.neuron);
      if (!first[c] || s.time < *first[c]) first[c] = s.time;
    }
    std::optional<std::uint32_t> earliest;
    for (const auto& f : first) {
      if (f && (!earliest || *f < *earliest)) earliest = f;
    }
    for (const SpikeEvent& s : UnpackEvents(out.output_stream)) {
      if (s.time == earliest) ++counts[decode.class_of(s.neuron)];
    }
    const DecodeOutcome host = DecodeGroupedTtfs(first, decode, counts);
    matches += host.label == expected.label && host.no_spike == expected.no_spike;
    readback += ElapsedMs(t);
  }
  const double total = ElapsedMs(start);

  const double n = static_cast<double>(dataset.size());
  ScopeBreakdown b;
  b.n = dataset.size();
  b.readback_matches = matches;
  b.spike_packing_ms = packing / n;
  b.reference_eval_ms = reference / n;
  b.accel_run_ms = run / n;
  b.readback_ms = readback / n;
  b.end_to_end_ms = total / n;
  return b;
}

}  // namespace snnaccel
