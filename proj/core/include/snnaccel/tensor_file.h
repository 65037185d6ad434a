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

// Portable weight interchange file ("WTS1"): a 16-byte little-endian header
// (magic, rows, cols, dtype tag) followed by rows*cols binary32 values in
// row-major order.

#ifndef SNNACCEL_TENSOR_FILE_H_
#define SNNACCEL_TENSOR_FILE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace snnaccel {

inline constexpr std::uint32_t kTensorDtypeF32 = 1;

struct Tensor2d {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<float> values;

  bool operator==(const Tensor2d&) const = default;
};

std::vector<std::uint8_t> SerializeTensor(const Tensor2d& tensor);
Tensor2d ParseTensor(std::span<const std::uint8_t> bytes);

void WriteTensorFile(const Tensor2d& tensor, const std::string& path);
Tensor2d ReadTensorFile(const std::string& path);

}  // namespace snnaccel

#endif  // SNNACCEL_TENSOR_FILE_H_
