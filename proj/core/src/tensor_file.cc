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

#include "snnaccel/tensor_file.h"

#include <fstream>

#include "byte_io.h"
#include "snnaccel/dataset.h"
#include "snnaccel/errors.h"

namespace snnaccel {

namespace {
constexpr std::array<char, 4> kTensorMagic = {'W', 'T', 'S', '1'};
}  // namespace

std::vector<std::uint8_t> SerializeTensor(const Tensor2d& tensor) {
  if (tensor.values.size() != static_cast<std::size_t>(tensor.rows) * tensor.cols) {
    throw ContractError("tensor value count != rows x cols");
  }
  ByteWriter w;
  w.Tag(kTensorMagic);
  w.U32(tensor.rows);
  w.U32(tensor.cols);
  w.U32(kTensorDtypeF32);
  for (float v : tensor.values) w.F32(v);
  return std::move(w).Take();
}

Tensor2d ParseTensor(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  if (r.Tag() != kTensorMagic) throw FormatError("not a WTS1 tensor file");
  Tensor2d t;
  t.rows = r.U32();
  t.cols = r.U32();
  const std::uint32_t dtype = r.U32();
  if (dtype != kTensorDtypeF32) {
    throw FormatError("unsupported tensor dtype tag " + std::to_string(dtype));
  }
  const std::size_t n = static_cast<std::size_t>(t.rows) * t.cols;
  if (r.remaining() != n * 4) {
    if (r.remaining() < n * 4) throw IoError("truncated WTS1 payload");
    throw FormatError("trailing bytes after WTS1 payload");
  }
  t.values.resize(n);
  for (float& v : t.values) v = r.F32();
  return t;
}

void WriteTensorFile(const Tensor2d& tensor, const std::string& path) {
  const std::vector<std::uint8_t> bytes = SerializeTensor(tensor);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

Tensor2d ReadTensorFile(const std::string& path) {
  return ParseTensor(ReadFileBytes(path));
}

}  // namespace snnaccel
