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

#include "snnaccel/artifact.h"

#include <openssl/evp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string_view>

#include "byte_io.h"
#include "snnaccel/errors.h"

namespace snnaccel {
namespace {

constexpr std::array<char, 4> kTagHeader = {'H', 'D', 'R', 'R'};
constexpr std::array<char, 4> kTagLayers = {'L', 'A', 'Y', 'R'};
constexpr std::array<char, 4> kTagWeights = {'W', 'G', 'H', 'T'};
constexpr std::array<char, 4> kTagThresholds = {'T', 'H', 'R', 'S'};
constexpr std::array<char, 4> kTagConnectivity = {'C', 'O', 'N', 'N'};
constexpr std::array<char, 4> kTagDecode = {'D', 'E', 'C', 'D'};
constexpr std::array<char, 4> kTagDigest = {'D', 'I', 'G', 'E'};

constexpr std::size_t kChunkPreamble = 8;
constexpr std::size_t kHeaderPayload = 32;
constexpr std::size_t kLayerRecord = 20;
constexpr std::size_t kDescriptorRecord = 6;
constexpr std::size_t kSynapseRecord = 4;
constexpr std::size_t kDigestChunk = kChunkPreamble + 32;

std::string TagString(const std::array<char, 4>& tag) {
  return std::string(tag.begin(), tag.end());
}

void BeginChunk(ByteWriter& w, const std::array<char, 4>& tag,
                std::size_t payload) {
  w.Tag(tag);
  w.U32(static_cast<std::uint32_t>(payload));
}

void WriteHeader(ByteWriter& w, const ArtifactHeader& h) {
  BeginChunk(w, kTagHeader, kHeaderPayload);
  w.Tag(h.magic);
  w.U16(h.version);
  w.U16(0);
  w.U32(h.input_count);
  w.U32(h.output_count);
  w.U32(h.total_neurons);
  w.U32(h.time_window);
  w.U32(h.clock_hz);
  w.U32(h.flags);
}

void WriteLayers(ByteWriter& w, const std::vector<LayerDescriptor>& layers) {
  BeginChunk(w, kTagLayers, 4 + kLayerRecord * layers.size());
  w.U32(static_cast<std::uint32_t>(layers.size()));
  for (const LayerDescriptor& l : layers) {
    w.U8(static_cast<std::uint8_t>(l.kind));
    w.U8(l.fire_once ? 1 : 0);
    w.U16(0);
    w.U32(l.in_dim);
    w.U32(l.out_dim);
    w.U32(l.leak_num);
    w.U32(l.leak_den);
  }
}

void WriteWeights(ByteWriter& w, const QuantizedWeights& q) {
  BeginChunk(w, kTagWeights, 12 + q.values.size());
  w.U32(q.rows);
  w.U32(q.cols);
  w.F32(q.scale);
  for (std::int8_t v : q.values) w.I8(v);
}

void WriteThresholds(ByteWriter& w, const ThresholdVector& t) {
  BeginChunk(w, kTagThresholds, 4 + 4 * t.values.size());
  w.U32(static_cast<std::uint32_t>(t.values.size()));
  for (std::int32_t v : t.values) w.I32(v);
}

void WriteConnectivity(ByteWriter& w, const ConnectivityTable& c) {
  BeginChunk(w, kTagConnectivity,
             8 + kDescriptorRecord * c.descriptors.size() +
                 kSynapseRecord * c.synapses.size());
  w.U32(static_cast<std::uint32_t>(c.descriptors.size()));
  w.U32(static_cast<std::uint32_t>(c.synapses.size()));
  for (const SynapseDescriptor& d : c.descriptors) {
    w.U32(d.offset);
    w.U16(d.count);
  }
  for (const PackedSynapse& s : c.synapses) {
    w.U16(s.target_id);
    w.I8(s.weight);
    w.U8(s.reserved);
  }
}

void WriteDecode(ByteWriter& w, const DecodeMetadata& d) {
  BeginChunk(w, kTagDecode, 12);
  w.U32(d.num_classes);
  w.U32(d.group_size);
  w.U32(d.output_base);
}

// Reads one chunk preamble and checks tag and, when given, exact length.
std::span<const std::uint8_t> OpenChunk(ByteReader& r,
                                        const std::array<char, 4>& tag) {
  const std::array<char, 4> got = r.Tag();
  if (got != tag) {
    throw FormatError("expected chunk " + TagString(tag) + ", found '" +
                      TagString(got) + "' at offset " +
                      std::to_string(r.position() - 4));
  }
  const std::uint32_t length = r.U32();
  return r.Bytes(length);
}

void ExpectConsumed(const ByteReader& r, const std::array<char, 4>& tag) {
  if (!r.at_end()) {
    throw FormatError("chunk " + TagString(tag) + " has " +
                      std::to_string(r.remaining()) + " trailing bytes");
  }
}

ArtifactHeader ParseHeader(std::span<const std::uint8_t> payload) {
  ByteReader r(payload);
  ArtifactHeader h;
  h.magic = r.Tag();
  if (h.magic != kArtifactMagic) {
    throw FormatError("bad magic '" + TagString(h.magic) + "'");
  }
  h.version = r.U16();
  if (h.version != kArtifactVersion) {
    throw FormatError("unsupported artifact version " +
                      std::to_string(h.version));
  }
  if (r.U16() != 0) throw FormatError("nonzero reserved header field");
  h.input_count = r.U32();
  h.output_count = r.U32();
  h.total_neurons = r.U32();
  h.time_window = r.U32();
  h.clock_hz = r.U32();
  h.flags = r.U32();
  ExpectConsumed(r, kTagHeader);
  return h;
}

std::vector<LayerDescriptor> ParseLayers(std::span<const std::uint8_t> payload) {
  ByteReader r(payload);
  const std::uint32_t count = r.U32();
  if (r.remaining() != static_cast<std::size_t>(count) * kLayerRecord) {
    throw FormatError("LAYR length does not match layer count");
  }
  std::vector<LayerDescriptor> layers(count);
  for (LayerDescriptor& l : layers) {
    const std::uint8_t kind = r.U8();
    if (kind != static_cast<std::uint8_t>(LayerKind::kLinear) &&
        kind != static_cast<std::uint8_t>(LayerKind::kLif)) {
      throw FormatError("unknown layer kind " + std::to_string(kind));
    }
    l.kind = static_cast<LayerKind>(kind);
    const std::uint8_t fire_once = r.U8();
    if (fire_once > 1) throw FormatError("fire_once flag must be 0 or 1");
    l.fire_once = fire_once == 1;
    if (r.U16() != 0) throw FormatError("nonzero reserved layer field");
    l.in_dim = r.U32();
    l.out_dim = r.U32();
    l.leak_num = r.U32();
    l.leak_den = r.U32();
  }
  return layers;
}

QuantizedWeights ParseWeights(std::span<const std::uint8_t> payload) {
  ByteReader r(payload);
  QuantizedWeights q;
  q.rows = r.U32();
  q.cols = r.U32();
  q.scale = r.F32();
  const std::size_t n = static_cast<std::size_t>(q.rows) * q.cols;
  if (r.remaining() != n) {
    throw FormatError("WGHT length does not match rows x cols");
  }
  q.values.resize(n);
  for (std::int8_t& v : q.values) v = r.I8();
  return q;
}

ThresholdVector ParseThresholds(std::span<const std::uint8_t> payload) {
  ByteReader r(payload);
  const std::uint32_t count = r.U32();
  if (r.remaining() != static_cast<std::size_t>(count) * 4) {
    throw FormatError("THRS length does not match threshold count");
  }
  ThresholdVector t;
  t.values.resize(count);
  for (std::int32_t& v : t.values) v = r.I32();
  return t;
}

ConnectivityTable ParseConnectivity(std::span<const std::uint8_t> payload) {
  ByteReader r(payload);
  const std::uint32_t descriptors = r.U32();
  const std::uint32_t synapses = r.U32();
  if (r.remaining() !=
      static_cast<std::size_t>(descriptors) * kDescriptorRecord +
          static_cast<std::size_t>(synapses) * kSynapseRecord) {
    throw FormatError("CONN length does not match descriptor/synapse counts");
  }
  ConnectivityTable c;
  c.descriptors.resize(descriptors);
  for (SynapseDescriptor& d : c.descriptors) {
    d.offset = r.U32();
    d.count = r.U16();
  }
  c.synapses.resize(synapses);
  for (PackedSynapse& s : c.synapses) {
    s.target_id = r.U16();
    s.weight = r.I8();
    s.reserved = r.U8();
  }
  return c;
}

DecodeMetadata ParseDecode(std::span<const std::uint8_t> payload) {
  ByteReader r(payload);
  DecodeMetadata d;
  d.num_classes = r.U32();
  d.group_size = r.U32();
  d.output_base = r.U32();
  ExpectConsumed(r, kTagDecode);
  return d;
}

class IssueSink {
 public:
  explicit IssueSink(ValidationReport& report) : report_(report) {}

  void Add(std::string_view rule, std::string detail) {
    report_.issues.push_back({std::string(rule), std::move(detail)});
  }

 private:
  ValidationReport& report_;
};

void CheckHeader(const DeploymentArtifact& a, IssueSink& sink) {
  const ArtifactHeader& h = a.header;
  if (h.magic != kArtifactMagic) sink.Add(rules::kMagic, "magic is not SNNA");
  if (h.version != kArtifactVersion) {
    sink.Add(rules::kVersion, "version " + std::to_string(h.version));
  }
  if (h.time_window < 1) sink.Add(rules::kTimeWindow, "time_window is 0");
  if (h.clock_hz == 0) sink.Add(rules::kClock, "clock_hz is 0");
  if (h.input_count == 0 || h.output_count == 0) {
    sink.Add(rules::kNeuronCount, "input and output counts must be positive");
  }
  if (static_cast<std::uint64_t>(h.input_count) + h.output_count !=
      h.total_neurons) {
    sink.Add(rules::kNeuronCount,
             "total_neurons " + std::to_string(h.total_neurons) +
                 " != input_count + output_count");
  }
}

void CheckLayers(const DeploymentArtifact& a, IssueSink& sink) {
  const ArtifactHeader& h = a.header;
  if (a.layers.size() != 2 || a.layers[0].kind != LayerKind::kLinear ||
      a.layers[1].kind != LayerKind::kLif) {
    sink.Add(rules::kLayers, "expected exactly [linear, lif]");
    return;
  }
  const LayerDescriptor& linear = a.layers[0];
  const LayerDescriptor& lif = a.layers[1];
  if (linear.in_dim != h.input_count || linear.out_dim != h.output_count) {
    sink.Add(rules::kLayers, "linear stage shape disagrees with header");
  }
  if (lif.in_dim != linear.out_dim || lif.out_dim != linear.out_dim) {
    sink.Add(rules::kLayers, "lif stage shape disagrees with linear stage");
  }
  if (lif.leak_den == 0 || lif.leak_num > lif.leak_den) {
    sink.Add(rules::kLayers, "leak must satisfy 0 <= num <= den, den > 0");
  }
  if (!lif.fire_once) sink.Add(rules::kLayers, "lif stage must be fire-once");
}

void CheckWeights(const DeploymentArtifact& a, IssueSink& sink) {
  const QuantizedWeights& q = a.weights;
  if (q.rows != a.header.input_count || q.cols != a.header.output_count) {
    sink.Add(rules::kWeights, "dense block shape disagrees with header");
  }
  if (q.values.size() != static_cast<std::size_t>(q.rows) * q.cols) {
    sink.Add(rules::kWeights, "dense block size != rows x cols");
  }
  const bool all_zero = std::all_of(q.values.begin(), q.values.end(),
                                    [](std::int8_t v) { return v == 0; });
  if (std::any_of(q.values.begin(), q.values.end(),
                  [](std::int8_t v) { return v == -128; })) {
    sink.Add(rules::kWeights, "value -128 outside [-127, 127]");
  }
  if (!std::isfinite(q.scale) || q.scale < 0.0f ||
      (q.scale == 0.0f && !all_zero)) {
    sink.Add(rules::kWeights, "scale must be finite and positive");
  }
}

void CheckThresholds(const DeploymentArtifact& a, IssueSink& sink) {
  const ThresholdVector& t = a.thresholds;
  if (t.values.size() != a.header.total_neurons - a.header.input_count &&
      a.header.total_neurons >= a.header.input_count) {
    sink.Add(rules::kThresholds, "length != number of non-input neurons");
  }
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    if (t.values[i] <= 0) {
      sink.Add(rules::kThresholds,
               "threshold " + std::to_string(i) + " is not positive");
      break;
    }
  }
}

void CheckConnectivity(const DeploymentArtifact& a, IssueSink& sink) {
  const ConnectivityTable& c = a.connectivity;
  const ArtifactHeader& h = a.header;
  if (c.descriptors.size() != h.input_count) {
    sink.Add(rules::kConnectivity, "descriptor count != input_count");
    return;
  }
  // Ranges must tile a prefix-free, in-bounds layout; sorting by offset lets
  // overlap be checked pairwise.
  std::vector<SynapseDescriptor> sorted = c.descriptors;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.offset < y.offset; });
  std::uint64_t end = 0;
  for (const SynapseDescriptor& d : sorted) {
    if (d.count == 0) continue;
    if (d.offset < end) {
      sink.Add(rules::kConnectivity, "overlapping descriptor ranges");
      return;
    }
    end = static_cast<std::uint64_t>(d.offset) + d.count;
    if (end > c.synapses.size()) {
      sink.Add(rules::kConnectivity, "descriptor range out of bounds");
      return;
    }
  }
  for (const PackedSynapse& s : c.synapses) {
    if (s.target_id < h.input_count || s.target_id >= h.total_neurons) {
      sink.Add(rules::kConnectivity,
               "target " + std::to_string(s.target_id) + " is not a mapped "
               "non-input neuron");
      return;
    }
    if (s.reserved != 0) {
      sink.Add(rules::kConnectivity, "nonzero reserved synapse byte");
      return;
    }
    if (s.weight == 0 || s.weight == -128) {
      sink.Add(rules::kConnectivity, "synapse weight must be in [-127, 127] "
                                     "and nonzero");
      return;
    }
  }
}

// WGHT and CONN must encode the same nonzero weights.
void CheckDenseCopy(const DeploymentArtifact& a, IssueSink& sink) {
  const QuantizedWeights& q = a.weights;
  const ConnectivityTable& c = a.connectivity;
  if (q.values.size() != static_cast<std::size_t>(q.rows) * q.cols ||
      c.descriptors.size() != q.rows) {
    return;
  }
  const std::uint32_t base = a.header.input_count;
  for (std::uint32_t src = 0; src < q.rows; ++src) {
    const SynapseDescriptor& d = c.descriptors[src];
    if (static_cast<std::uint64_t>(d.offset) + d.count > c.synapses.size()) {
      return;
    }
    std::uint32_t nonzero = 0;
    for (std::uint32_t col = 0; col < q.cols; ++col) {
      if (q.at(src, col) != 0) ++nonzero;
    }
    if (nonzero != d.count) {
      sink.Add(rules::kDenseCopy,
               "source " + std::to_string(src) + " fan-out count differs");
      return;
    }
    for (const PackedSynapse& s : c.fanout(src)) {
      if (s.target_id < base || s.target_id - base >= q.cols ||
          q.at(src, s.target_id - base) != s.weight) {
        sink.Add(rules::kDenseCopy,
                 "source " + std::to_string(src) + " weight differs");
        return;
      }
    }
  }
}

void CheckDecode(const DeploymentArtifact& a, IssueSink& sink) {
  const DecodeMetadata& d = a.decode;
  if (d.num_classes == 0 || d.group_size == 0) {
    sink.Add(rules::kDecode, "num_classes and group_size must be positive");
    return;
  }
  if (static_cast<std::uint64_t>(d.num_classes) * d.group_size !=
      a.header.output_count) {
    sink.Add(rules::kDecode, "num_classes x group_size != output_count");
  }
  if (d.output_base != a.header.input_count) {
    sink.Add(rules::kDecode, "output_base must equal input_count");
  }
}

void CheckExecutableCapacity(const DeploymentArtifact& a, IssueSink& sink) {
  if (a.header.total_neurons > kExecutableNeuronLimit) {
    sink.Add(rules::kExecutableNeurons,
             std::to_string(a.header.total_neurons) + " mapped neurons > " +
                 std::to_string(kExecutableNeuronLimit));
  }
  for (const PackedSynapse& s : a.connectivity.synapses) {
    if (s.target_id >= kExecutableNeuronLimit) {
      sink.Add(rules::kExecutableTargets,
               "target " + std::to_string(s.target_id) + " >= " +
                   std::to_string(kExecutableNeuronLimit));
      break;
    }
  }
  if (a.header.time_window > kMaxTimeWindow) {
    sink.Add(rules::kTimeWindow, "time_window exceeds the 13-bit packet field");
  }
}

}  // namespace

const LayerDescriptor* DeploymentArtifact::lif_layer() const {
  for (const LayerDescriptor& l : layers) {
    if (l.kind == LayerKind::kLif) return &l;
  }
  return nullptr;
}

bool ValidationReport::violates(std::string_view rule) const {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const ValidationIssue& i) { return i.rule == rule; });
}

std::string ValidationReport::ToString() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i > 0) out << "; ";
    out << issues[i].rule << ": " << issues[i].detail;
  }
  return out.str();
}

ValidationReport ValidateArtifact(const DeploymentArtifact& artifact,
                                  ValidationLevel level) {
  ValidationReport report;
  IssueSink sink(report);
  CheckHeader(artifact, sink);
  CheckLayers(artifact, sink);
  CheckWeights(artifact, sink);
  CheckThresholds(artifact, sink);
  CheckConnectivity(artifact, sink);
  CheckDenseCopy(artifact, sink);
  CheckDecode(artifact, sink);
  if (artifact.header.total_neurons > kEncodableNeuronLimit) {
    sink.Add(rules::kEncodableNeurons,
             std::to_string(artifact.header.total_neurons) + " neurons > " +
                 std::to_string(kEncodableNeuronLimit));
  }
  if (artifact.synapse_count() > kEncodableSynapseLimit) {
    sink.Add(rules::kSynapses,
             std::to_string(artifact.synapse_count()) + " synapses > " +
                 std::to_string(kEncodableSynapseLimit));
  }
  if (level == ValidationLevel::kExecutable && !artifact.header.executable()) {
    sink.Add(rules::kExecutableFlag, "artifact is not flagged executable");
  }
  if (level == ValidationLevel::kExecutable || artifact.header.executable()) {
    CheckExecutableCapacity(artifact, sink);
  }
  return report;
}

void RequireValid(const DeploymentArtifact& artifact, ValidationLevel level) {
  const ValidationReport report = ValidateArtifact(artifact, level);
  if (!report.ok()) throw ValidationError(report.ToString());
}

Digest ArtifactDigest(std::span<const std::uint8_t> bytes) {
  Digest out{};
  unsigned int length = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                             EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), out.data(), &length) != 1 ||
      length != out.size()) {
    throw Error(ErrorCode::kIo, "SHA-256 computation failed");
  }
  return out;
}

std::string DigestHex(const Digest& digest) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s;
  s.reserve(64);
  for (std::uint8_t b : digest) {
    s.push_back(kHex[b >> 4]);
    s.push_back(kHex[b & 0xF]);
  }
  return s;
}

std::vector<std::uint8_t> SerializeArtifact(const DeploymentArtifact& artifact) {
  ByteWriter w;
  WriteHeader(w, artifact.header);
  WriteLayers(w, artifact.layers);
  WriteWeights(w, artifact.weights);
  WriteThresholds(w, artifact.thresholds);
  WriteConnectivity(w, artifact.connectivity);
  WriteDecode(w, artifact.decode);
  const Digest digest = ArtifactDigest(w.bytes());
  BeginChunk(w, kTagDigest, digest.size());
  for (std::uint8_t b : digest) w.U8(b);
  return std::move(w).Take();
}

DeploymentArtifact ParseArtifact(std::span<const std::uint8_t> bytes) {
  // Identity gate first (magic, version), then the digest, then structure,
  // so that any other single-byte change surfaces as corruption.
  constexpr std::size_t kGateEnd = kChunkPreamble + 6;
  if (bytes.size() < kGateEnd) throw IoError("artifact truncated inside the header");
  {
    ByteReader gate(bytes.subspan(kChunkPreamble, 6));
    if (gate.Tag() != kArtifactMagic) throw FormatError("bad artifact magic");
    const std::uint16_t version = gate.U16();
    if (version != kArtifactVersion) {
      throw FormatError("unsupported artifact version " + std::to_string(version));
    }
  }
  if (bytes.size() < kGateEnd + kDigestChunk) {
    throw IoError("artifact truncated: no room for the digest chunk");
  }
  DeploymentArtifact a;
  const std::size_t body_end = bytes.size() - kDigestChunk;
  {
    ByteReader tail(bytes.subspan(body_end));
    const std::array<char, 4> tag = tail.Tag();
    const std::uint32_t length = tail.U32();
    if (tag != kTagDigest || length != 32) {
      // Either the file was cut short or the chunk stream is malformed.
      throw IoError("artifact truncated or missing trailing DIGE chunk");
    }
    std::copy_n(bytes.begin() + body_end + kChunkPreamble, 32,
                a.digest.begin());
  }
  if (ArtifactDigest(bytes.first(body_end)) != a.digest) {
    throw CorruptionError("digest mismatch");
  }

  ByteReader body(bytes.first(body_end));
  a.header = ParseHeader(OpenChunk(body, kTagHeader));
  a.layers = ParseLayers(OpenChunk(body, kTagLayers));
  a.weights = ParseWeights(OpenChunk(body, kTagWeights));
  a.thresholds = ParseThresholds(OpenChunk(body, kTagThresholds));
  a.connectivity = ParseConnectivity(OpenChunk(body, kTagConnectivity));
  a.decode = ParseDecode(OpenChunk(body, kTagDecode));
  if (!body.at_end()) {
    throw FormatError("unexpected bytes before the DIGE chunk");
  }
  RequireValid(a, ValidationLevel::kEncodable);
  return a;
}

DeploymentArtifact SealArtifact(DeploymentArtifact artifact) {
  const std::vector<std::uint8_t> bytes = SerializeArtifact(artifact);
  std::copy(bytes.end() - 32, bytes.end(), artifact.digest.begin());
  return artifact;
}

std::size_t WriteArtifact(const DeploymentArtifact& artifact,
                          std::ostream& out) {
  RequireValid(artifact, ValidationLevel::kEncodable);
  const std::vector<std::uint8_t> bytes = SerializeArtifact(artifact);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed to write artifact bytes");
  return bytes.size();
}

DeploymentArtifact ReadArtifact(std::istream& in) {
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed to read artifact bytes");
  return ParseArtifact(bytes);
}

std::size_t WriteArtifactFile(const DeploymentArtifact& artifact,
                              const std::string& path) {
  RequireValid(artifact, ValidationLevel::kEncodable);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  const std::size_t n = WriteArtifact(artifact, out);
  out.close();
  if (!out) throw IoError("failed to flush '" + path + "'");
  return n;
}

DeploymentArtifact ReadArtifactFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open artifact '" + path + "'");
  return ReadArtifact(in);
}

}  // namespace snnaccel
