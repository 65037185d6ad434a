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

#include <benchmark/benchmark.h>

#include "fixtures.h"
#include "snnaccel/accel.h"

namespace snnaccel {
namespace {

void BM_PackEvents(benchmark::State& state) {
  const auto events = EncodeTtfs(bench::DigitLikeImage(1), EncoderConfig{});
  for (auto _ : state) benchmark::DoNotOptimize(PackEvents(events));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(events.size()));
}
BENCHMARK(BM_PackEvents);

void BM_AcceleratorRun(benchmark::State& state) {
  const DeploymentArtifact artifact = Export(bench::DeployedShape());
  AccelConfig config;
  config.cycle_mode = state.range(0) ? CycleMode::kMeasured : CycleMode::kDeployed;
  const Accelerator accel(artifact, config);
  const auto packets = PackEvents(EncodeTtfs(bench::DigitLikeImage(2), EncoderConfig{}));
  for (auto _ : state) benchmark::DoNotOptimize(accel.Run(packets));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_AcceleratorRun)->Arg(0)->Arg(1)->ArgName("measured");

void BM_StreamBatch(benchmark::State& state) {
  const DeploymentArtifact artifact = Export(bench::DeployedShape());
  std::vector<std::vector<EventPacket>> stream;
  for (std::uint64_t i = 0; i < 64; ++i) {
    stream.push_back(PackEvents(EncodeTtfs(bench::DigitLikeImage(i), EncoderConfig{})));
  }
  for (auto _ : state) benchmark::DoNotOptimize(StreamBatch(artifact, stream));
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_StreamBatch);

}  // namespace
}  // namespace snnaccel
