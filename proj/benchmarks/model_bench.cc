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
#include "snnaccel/model.h"

namespace snnaccel {
namespace {

void BM_EncodeTtfs(benchmark::State& state) {
  const auto image = bench::DigitLikeImage(3);
  for (auto _ : state) benchmark::DoNotOptimize(EncodeTtfs(image, EncoderConfig{}));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EncodeTtfs);

void BM_Quantize(benchmark::State& state) {
  const NetworkSpec net = bench::DeployedShape();
  for (auto _ : state) benchmark::DoNotOptimize(Quantize(net));
}
BENCHMARK(BM_Quantize);

// Quantize + connectivity compaction + validation + sealing.
void BM_Export(benchmark::State& state) {
  const NetworkSpec net = bench::DeployedShape();
  for (auto _ : state) benchmark::DoNotOptimize(Export(net));
}
BENCHMARK(BM_Export);

}  // namespace
}  // namespace snnaccel

BENCHMARK_MAIN();
