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

#include "snnaccel/dataset.h"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "byte_io.h"
#include "snnaccel/errors.h"

namespace snnaccel {

Dataset Dataset::Head(std::size_t n) const {
  n = std::min(n, size());
  Dataset out;
  out.rows = rows;
  out.cols = cols;
  out.labels.assign(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n));
  out.pixels.assign(pixels.begin(),
                    pixels.begin() + static_cast<std::ptrdiff_t>(n * image_size()));
  return out;
}

namespace {

Dataset ParseIdxPair(std::span<const std::uint8_t> images,
                     std::span<const std::uint8_t> labels) {
  ByteReader img(images);
  ByteReader lab(labels);

  const std::uint32_t img_magic = img.U32BigEndian();
  if (img_magic != kIdxImagesMagic) {
    throw FormatError("images file has magic " + std::to_string(img_magic) +
                      ", expected 0x00000803");
  }
  const std::uint32_t lab_magic = lab.U32BigEndian();
  if (lab_magic != kIdxLabelsMagic) {
    throw FormatError("labels file has magic " + std::to_string(lab_magic) +
                      ", expected 0x00000801");
  }

  const std::uint32_t n_images = img.U32BigEndian();
  Dataset d;
  d.rows = img.U32BigEndian();
  d.cols = img.U32BigEndian();
  const std::uint32_t n_labels = lab.U32BigEndian();
  if (n_images != n_labels) {
    throw FormatError(std::to_string(n_images) + " images but " +
                      std::to_string(n_labels) + " labels");
  }
  if (n_images == 0 || d.rows == 0 || d.cols == 0) {
    throw FormatError("empty IDX dataset");
  }

  const std::size_t pixel_count = static_cast<std::size_t>(n_images) * d.image_size();
  if (img.remaining() < pixel_count || lab.remaining() < n_labels) {
    throw FormatError("truncated IDX payload");
  }
  const auto pixel_bytes = img.Bytes(pixel_count);
  const auto label_bytes = lab.Bytes(n_labels);
  if (!img.at_end() || !lab.at_end()) {
    throw FormatError("trailing bytes after IDX payload");
  }
  d.pixels.assign(pixel_bytes.begin(), pixel_bytes.end());
  d.labels.assign(label_bytes.begin(), label_bytes.end());
  for (std::size_t i = 0; i < d.labels.size(); ++i) {
    if (d.labels[i] >= 10) {
      throw FormatError("label " + std::to_string(d.labels[i]) + " at index " +
                        std::to_string(i) + " is not a digit class");
    }
  }
  return d;
}

}  // namespace

Dataset ParseMnistIdx(std::span<const std::uint8_t> images,
                      std::span<const std::uint8_t> labels) {
  try {
    return ParseIdxPair(images, labels);
  } catch (const IoError& e) {
    // A short header is a malformed file, not a failed read.
    throw FormatError(std::string("truncated IDX file: ") + e.what());
  }
}

std::vector<std::uint8_t> ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return bytes;
}

Dataset LoadMnistIdx(const std::string& images_path,
                     const std::string& labels_path) {
  return ParseMnistIdx(ReadFileBytes(images_path), ReadFileBytes(labels_path));
}

}  // namespace snnaccel
