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

// The deployment artifact: one bundle of quantized weights, thresholds,
// connectivity and grouped decode metadata that every runtime consumes
// unchanged.
//
// On disk an artifact is a sequence of little-endian chunks, each laid out
// as a 4-byte tag, a uint32 payload length and the payload. Chunk order is
// fixed: HDRR LAYR WGHT THRS CONN DECD DIGE. The DIGE payload is the SHA-256
// of every byte that precedes the DIGE chunk.

#ifndef SNNACCEL_ARTIFACT_H_
#define SNNACCEL_ARTIFACT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace snnaccel {

inline constexpr std::array<char, 4> kArtifactMagic = {'S', 'N', 'N', 'A'};
inline constexpr std::uint16_t kArtifactVersion = 1;

// Fabric capacity: 16 core groups of 128 lanes are directly addressable by
// the event path; the surrounding format can describe larger networks.
inline constexpr std::uint32_t kCoreGroups = 16;
inline constexpr std::uint32_t kLanesPerGroup = 128;
inline constexpr std::uint32_t kExecutableNeuronLimit = kCoreGroups * kLanesPerGroup;
inline constexpr std::uint32_t kEncodableNeuronLimit = 4890;
inline constexpr std::uint32_t kEncodableSynapseLimit = 843776;
inline constexpr std::uint32_t kMaxTimeWindow = 1u << 13;

inline constexpr std::uint32_t kDefaultClockHz = 80'000'000;

enum ArtifactFlag : std::uint32_t {
  kFlagExecutable = 1u << 0,
  kFlagEncodable = 1u << 1,
};

using Digest = std::array<std::uint8_t, 32>;

struct ArtifactHeader {
  std::array<char, 4> magic = kArtifactMagic;
  std::uint16_t version = kArtifactVersion;
  std::uint32_t input_count = 0;
  std::uint32_t output_count = 0;
  std::uint32_t total_neurons = 0;
  std::uint32_t time_window = 64;
  std::uint32_t clock_hz = kDefaultClockHz;
  std::uint32_t flags = kFlagEncodable;

  bool executable() const { return (flags & kFlagExecutable) != 0; }
  bool operator==(const ArtifactHeader&) const = default;
};

enum class LayerKind : std::uint8_t {
  kLinear = 1,
  kLif = 2,
};

struct LayerDescriptor {
  LayerKind kind = LayerKind::kLinear;
  std::uint32_t in_dim = 0;
  std::uint32_t out_dim = 0;
  // Membrane leak applied once per time step as floor(v * num / den).
  std::uint32_t leak_num = 1;
  std::uint32_t leak_den = 1;
  bool fire_once = true;

  bool operator==(const LayerDescriptor&) const = default;
};

// Dense INT8 block, source-major: values[source * cols + target].
struct QuantizedWeights {
  std::vector<std::int8_t> values;
  float scale = 1.0f;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;

  std::int8_t at(std::uint32_t row, std::uint32_t col) const {
    return values[static_cast<std::size_t>(row) * cols + col];
  }
  bool operator==(const QuantizedWeights&) const = default;
};

struct ThresholdVector {
  // One entry per non-input neuron, indexed by (neuron id - input_count).
  std::vector<std::int32_t> values;

  bool operator==(const ThresholdVector&) const = default;
};

struct SynapseDescriptor {
  std::uint32_t offset = 0;
  std::uint16_t count = 0;

  bool operator==(const SynapseDescriptor&) const = default;
};

// Packed synapse entry. On disk: [target_id:16][weight:8][reserved:8].
struct PackedSynapse {
  // group << 7 | lane.
  std::uint16_t target_id = 0;
  std::int8_t weight = 0;
  std::uint8_t reserved = 0;

  std::uint32_t group() const { return target_id >> 7; }
  std::uint32_t lane() const { return target_id & 0x7Fu; }
  bool operator==(const PackedSynapse&) const = default;
};

// Fan-out of every input neuron; descriptors[source] indexes `synapses`.
struct ConnectivityTable {
  std::vector<SynapseDescriptor> descriptors;
  std::vector<PackedSynapse> synapses;

  std::span<const PackedSynapse> fanout(std::uint32_t source) const {
    const SynapseDescriptor& d = descriptors[source];
    return std::span<const PackedSynapse>(synapses).subspan(d.offset, d.count);
  }
  bool operator==(const ConnectivityTable&) const = default;
};

// Class c owns output neurons [output_base + c*group_size,
// output_base + (c+1)*group_size).
struct DecodeMetadata {
  std::uint32_t num_classes = 0;
  std::uint32_t group_size = 0;
  std::uint32_t output_base = 0;

  std::uint32_t first_neuron(std::uint32_t cls) const {
    return output_base + cls * group_size;
  }
  std::uint32_t class_of(std::uint32_t neuron) const {
    return (neuron - output_base) / group_size;
  }
  bool operator==(const DecodeMetadata&) const = default;
};

struct DeploymentArtifact {
  ArtifactHeader header;
  std::vector<LayerDescriptor> layers;
  QuantizedWeights weights;
  ThresholdVector thresholds;
  ConnectivityTable connectivity;
  DecodeMetadata decode;
  Digest digest{};

  // Leak of the spiking stage; (1, 1) when no LIF layer is present.
  const LayerDescriptor* lif_layer() const;
  std::uint64_t synapse_count() const { return connectivity.synapses.size(); }

  bool operator==(const DeploymentArtifact&) const = default;
};

enum class ValidationLevel {
  kEncodable,
  kExecutable,
};

struct ValidationIssue {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  bool violates(std::string_view rule) const;
  std::string ToString() const;
};

// Rule names reported by ValidateArtifact.
namespace rules {
inline constexpr std::string_view kMagic = "header-magic";
inline constexpr std::string_view kVersion = "header-version";
inline constexpr std::string_view kTimeWindow = "header-time-window";
inline constexpr std::string_view kClock = "header-clock";
inline constexpr std::string_view kNeuronCount = "header-neuron-count";
inline constexpr std::string_view kLayers = "layers";
inline constexpr std::string_view kWeights = "weights";
inline constexpr std::string_view kThresholds = "thresholds";
inline constexpr std::string_view kConnectivity = "connectivity";
inline constexpr std::string_view kDenseCopy = "dense-copy-consistency";
inline constexpr std::string_view kDecode = "decode";
inline constexpr std::string_view kEncodableNeurons = "encodable-neuron-limit";
inline constexpr std::string_view kSynapses = "synapse-limit";
inline constexpr std::string_view kExecutableNeurons = "executable-neuron-limit";
inline constexpr std::string_view kExecutableTargets = "executable-target-range";
inline constexpr std::string_view kExecutableFlag = "executable-flag";
}  // namespace rules

// Lists every violated invariant. An artifact flagged executable must also
// satisfy the executable capacity rules at the encodable level.
ValidationReport ValidateArtifact(const DeploymentArtifact& artifact,
                                  ValidationLevel level);

// Throws ValidationError carrying the report when it is not empty.
void RequireValid(const DeploymentArtifact& artifact, ValidationLevel level);

Digest ArtifactDigest(std::span<const std::uint8_t> bytes);
std::string DigestHex(const Digest& digest);

// Canonical byte image of the artifact, digest chunk included. The digest
// stored in `artifact` is ignored; the emitted one is always recomputed.
std::vector<std::uint8_t> SerializeArtifact(const DeploymentArtifact& artifact);
DeploymentArtifact ParseArtifact(std::span<const std::uint8_t> bytes);

// Returns a copy whose digest field matches its serialized form.
DeploymentArtifact SealArtifact(DeploymentArtifact artifact);

std::size_t WriteArtifact(const DeploymentArtifact& artifact, std::ostream& out);
DeploymentArtifact ReadArtifact(std::istream& in);

std::size_t WriteArtifactFile(const DeploymentArtifact& artifact,
                              const std::string& path);
DeploymentArtifact ReadArtifactFile(const std::string& path);

}  // namespace snnaccel

#endif  // SNNACCEL_ARTIFACT_H_
