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
#include "snnaccel/reference.h"

namespace snnaccel {
namespace {

void BM_TtfsReference(benchmark::State& state) {
  const DeploymentArtifact artifact = Export(bench::DeployedShape());
  const auto events = EncodeTtfs(bench::DigitLikeImage(4), EncoderConfig{});
  for (auto _ : state) benchmark::DoNotOptimize(RunTtfsReference(artifact, events));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TtfsReference);

void BM_DenseBaseline(benchmark::State& state) {
  const DeploymentArtifact artifact = Export(bench::DeployedShape());
  const auto image = bench::DigitLikeImage(5);
  const auto mode = state.range(0) ? DenseMode::kInt8 : DenseMode::kFp32;
  for (auto _ : state) benchmark::DoNotOptimize(RunDenseBaseline(artifact, image, mode));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DenseBaseline)->Arg(0)->Arg(1)->ArgName("int8");

}  // namespace
}  // namespace snnaccel
