// Copyright 2026 The fdasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// IDX (MNIST) reader. Files may be raw or gzip-compressed; both are read
// through zlib, which passes uncompressed input through unchanged.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fda/learner/dataset.hpp"

namespace fda::learner {

class IdxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class IdxOpenError : public IdxError {
 public:
  using IdxError::IdxError;
};
class IdxBadMagic : public IdxError {
 public:
  using IdxError::IdxError;
};
class IdxTruncated : public IdxError {
 public:
  using IdxError::IdxError;
};
class IdxCountMismatch : public IdxError {
 public:
  using IdxError::IdxError;
};

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;

struct IdxImageHeader {
  std::uint32_t count = 0;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
};

/// Reads only the 16-byte image header.
IdxImageHeader read_idx_image_header(const std::string& path);

/// Labels only; used to size models without reading the images.
std::vector<int> read_idx_labels(const std::string& path);

/// Pixels are scaled to [0, 1]. `num_classes == 0` infers max(label) + 1.
Dataset load_idx(const std::string& images_path, const std::string& labels_path,
                 std::size_t num_classes = 0);

}  // namespace fda::learner
