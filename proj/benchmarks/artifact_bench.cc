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

#include <sstream>

#include "fixtures.h"
#include "snnaccel/artifact.h"

namespace snnaccel {
namespace {

void BM_Serialize(benchmark::State& state) {
  const DeploymentArtifact artifact = Export(bench::DeployedShape());
  std::size_t bytes = 0;
  for (auto _ : state) {
    const auto out = SerializeArtifact(artifact);
    bytes = out.size();
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(bytes));
}
BENCHMARK(BM_Serialize);

void BM_ParseAndVerify(benchmark::State& state) {
  const auto bytes = SerializeArtifact(Export(bench::DeployedShape()));
  for (auto _ : state) benchmark::DoNotOptimize(ParseArtifact(bytes));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(bytes.size()));
}
BENCHMARK(BM_ParseAndVerify);

void BM_Digest(benchmark::State& state) {
  const auto bytes = SerializeArtifact(Export(bench::DeployedShape()));
  for (auto _ : state) benchmark::DoNotOptimize(ArtifactDigest(bytes));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(bytes.size()));
}
BENCHMARK(BM_Digest);

}  // namespace
}  // namespace snnaccel
