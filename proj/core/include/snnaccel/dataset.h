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

#ifndef SNNACCEL_DATASET_H_
#define SNNACCEL_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace snnaccel {

inline constexpr std::uint32_t kIdxImagesMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelsMagic = 0x00000801;

// Row-major 8-bit images with one label each.
struct Dataset {
  std::vector<std::uint8_t> pixels;
  std::vector<std::uint8_t> labels;
  std::uint32_t rows = 28;
  std::uint32_t cols = 28;

  std::size_t size() const { return labels.size(); }
  std::size_t image_size() const { return static_cast<std::size_t>(rows) * cols; }
  std::span<const std::uint8_t> image(std::size_t i) const {
    return std::span<const std::uint8_t>(pixels).subspan(i * image_size(),
                                                          image_size());
  }

  // First n examples (or all of them when n >= size()).
  Dataset Head(std::size_t n) const;
};

// Parses IDX image/label byte images. FormatError on bad magic, dimension or
// count mismatch; IoError on truncation.
Dataset ParseMnistIdx(std::span<const std::uint8_t> images,
                      std::span<const std::uint8_t> labels);
Dataset LoadMnistIdx(const std::string& images_path,
                     const std::string& labels_path);

std::vector<std::uint8_t> ReadFileBytes(const std::string& path);

}  // namespace snnaccel

#endif  // SNNACCEL_DATASET_H_
