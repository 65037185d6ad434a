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

// Evaluation harness: equivalence checks between the two runtimes, the
// per-platform accuracy/latency/throughput/energy report, spike-drop
// robustness, repeatability and wall-clock phase profiling. Every report except the timing fields is
// independent of the worker count.

#ifndef SNNACCEL_HARNESS_H_
#define SNNACCEL_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snnaccel/accel.h"
#include "snnaccel/artifact.h"
#include "snnaccel/dataset.h"
#include "snnaccel/spike.h"

namespace snnaccel {

struct Mismatch {
  std::size_t index = 0;
  std::uint32_t reference_label = 0;
  bool reference_no_spike = false;
  std::uint32_t accel_label = 0;
  bool accel_no_spike = false;
};

struct EquivalenceReport {
  std::size_t n = 0;
  std::size_t matches = 0;
  std::vector<Mismatch> mismatches;  // ascending image index

  bool all_match() const { return matches == n; }
};

// Compares (label, no_spike) of the accelerator against the software
// reference for every image. Throws ContractError on an empty dataset or an
// image size that differs from the artifact's input count.
EquivalenceReport VerifyEquivalence(const DeploymentArtifact& artifact,
                                    const Dataset& dataset,
                                    const AccelConfig& config = {},
                                    unsigned jobs = 0);

// Same, but the accelerator is loaded from its own copy of the artifact, as
// on a board whose weight memory may differ from the host's file.
EquivalenceReport VerifyEquivalence(const DeploymentArtifact& reference_side,
                                    const DeploymentArtifact& accelerator_side,
                                    const Dataset& dataset,
                                    const AccelConfig& config = {},
                                    unsigned jobs = 0);

enum class Backend { kReference, kAccel, kDenseFp32, kDenseInt8 };

// Runs one backend over every image, in dataset order.
std::vector<InferenceResult> RunBackend(const DeploymentArtifact& artifact,
                                        const Dataset& dataset, Backend backend,
                                        const AccelConfig& config = {},
                                        unsigned jobs = 0);

struct PlatformRow {
  std::string platform;
  double accuracy_pct = 0.0;
  std::optional<double> latency_us;
  std::optional<double> throughput_img_s;
  std::optional<double> energy_nj;
};

inline constexpr const char* kPlatformAccel = "accel-pl";
inline constexpr const char* kPlatformReference = "ttfs-reference";
inline constexpr const char* kPlatformDenseFp32 = "dense-fp32";
inline constexpr const char* kPlatformDenseInt8 = "dense-int8";

struct EvalOptions {
  unsigned jobs = 0;
  // Fill the software rows' latency/throughput with host wall-clock
  // measurements. Off by default so reports are byte-reproducible.
  bool time_software = false;
};

struct EvalReport {
  std::size_t n = 0;
  std::size_t correct = 0;            // accelerator path
  std::size_t reference_correct = 0;  // software TTFS reference
  std::size_t equivalent = 0;         // images where both runtimes agree
  std::size_t no_spike = 0;
  double accuracy_pct = 0.0;
  double reference_accuracy_pct = 0.0;
  double dense_fp32_accuracy_pct = 0.0;
  double dense_int8_accuracy_pct = 0.0;
  CycleCounters cycles;  // stream aggregate
  double latency_us = 0.0;
  double throughput_img_s = 0.0;
  double energy_nj = 0.0;
  std::vector<std::uint32_t> predictions;  // accelerator labels
  std::vector<bool> no_spike_flags;
  std::vector<PlatformRow> rows;  // accel, reference, dense-fp32, dense-int8
};

EvalReport Evaluate(const DeploymentArtifact& artifact, const Dataset& dataset,
                    const AccelConfig& config = {}, const EvalOptions& options = {});

// Keeps each event iff (splitmix64(state) >> 11) * 2^-53 >= p, advancing the
// generator once per event in the given order. Throws ContractError unless
// 0 <= p <= 1.
std::vector<SpikeEvent> SpikeDrop(std::span<const SpikeEvent> events, double p,
                                  std::uint64_t seed);

// Generator seed for image `index` of a sweep seeded with `seed`. The same
// per-image stream is used at every drop ratio, so the retained sets are
// nested as the ratio grows.
std::uint64_t ImageSeed(std::uint64_t seed, std::uint64_t index);

struct RobustnessPoint {
  double ratio = 0.0;
  std::size_t correct = 0;
  double accuracy_pct = 0.0;
};

struct RobustnessReport {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::vector<RobustnessPoint> points;
};

inline const std::vector<double> kDefaultDropRatios = {0.0, 0.25, 0.5, 0.75};

RobustnessReport RobustnessSweep(const DeploymentArtifact& artifact,
                                 const Dataset& dataset,
                                 std::span<const double> ratios,
                                 std::uint64_t seed,
                                 const AccelConfig& config = {},
                                 unsigned jobs = 0);

struct RepeatabilityReport {
  std::size_t runs = 0;
  std::size_t n = 0;
  std::size_t pairs = 0;
  // Image-run pairs whose accelerator (label, no_spike) differs from the
  // software reference.
  std::size_t mismatches = 0;
  std::vector<double> accuracy_pct;  // one per run
};

// Each run builds a fresh accelerator and streams the whole dataset.
RepeatabilityReport Repeatability(const DeploymentArtifact& artifact,
                                  const Dataset& dataset, std::size_t runs = 5,
                                  const AccelConfig& config = {},
                                  unsigned jobs = 0);

struct ScopeBreakdown {
  std::size_t n = 0;
  // Milliseconds per image.
  double reference_eval_ms = 0.0;
  double spike_packing_ms = 0.0;
  double accel_run_ms = 0.0;  // accelerator run plus orchestration
  double readback_ms = 0.0;
  double end_to_end_ms = 0.0;
  std::size_t readback_matches = 0;  // images whose readback agreed with the reference

  double phase_sum_ms() const {
    return reference_eval_ms + spike_packing_ms + accel_run_ms + readback_ms;
  }
};

// Single-threaded wall-clock profile of the host-side inference path.
ScopeBreakdown ScopeProfile(const DeploymentArtifact& artifact,
                            const Dataset& dataset,
                            const AccelConfig& config = {});

}  // namespace snnaccel

#endif  // SNNACCEL_HARNESS_H_
