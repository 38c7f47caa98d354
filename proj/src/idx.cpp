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

#include "fda/learner/idx.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <memory>
#include <vector>

namespace fda::learner {
namespace {

struct GzCloser {
  void operator()(gzFile_s* f) const noexcept { gzclose(f); }
};
using GzHandle = std::unique_ptr<gzFile_s, GzCloser>;

GzHandle open_gz(const std::string& path) {
  GzHandle f(gzopen(path.c_str(), "rb"));
  if (!f) throw IdxOpenError("cannot open IDX file: " + path);
  return f;
}

void read_exact(gzFile_s* f, void* dst, std::size_t len, const std::string& path) {
  auto* out = static_cast<unsigned char*>(dst);
  while (len > 0) {
    const unsigned chunk = static_cast<unsigned>(std::min<std::size_t>(len, 1U << 30));
    const int got = gzread(f, out, chunk);
    if (got < 0) throw IdxError("read error in " + path);
    if (got == 0) throw IdxTruncated("truncated IDX file: " + path);
    out += got;
    len -= static_cast<std::size_t>(got);
  }
}

std::uint32_t read_be32(gzFile_s* f, const std::string& path) {
  std::array<unsigned char, 4> b{};
  read_exact(f, b.data(), b.size(), path);
  return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
         (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
}

void expect_magic(std::uint32_t got, std::uint32_t want, const std::string& path) {
  if (got != want) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "bad IDX magic 0x%08x (expected 0x%08x) in ", got, want);
    throw IdxBadMagic(buf + path);
  }
}

IdxImageHeader read_header(gzFile_s* f, const std::string& path) {
  expect_magic(read_be32(f, path), kIdxImageMagic, path);
  IdxImageHeader h;
  h.count = read_be32(f, path);
  h.rows = read_be32(f, path);
  h.cols = read_be32(f, path);
  return h;
}

}  // namespace

IdxImageHeader read_idx_image_header(const std::string& path) {
  auto f = open_gz(path);
  return read_header(f.get(), path);
}

std::vector<int> read_idx_labels(const std::string& path) {
  auto lab = open_gz(path);
  expect_magic(read_be32(lab.get(), path), kIdxLabelMagic, path);
  const std::uint32_t count = read_be32(lab.get(), path);
  std::vector<unsigned char> raw(count);
  read_exact(lab.get(), raw.data(), raw.size(), path);
  return std::vector<int>(raw.begin(), raw.end());
}

Dataset load_idx(const std::string& images_path, const std::string& labels_path,
                 std::size_t num_classes) {
  auto img = open_gz(images_path);
  const IdxImageHeader h = read_header(img.get(), images_path);

  auto lab = open_gz(labels_path);
  expect_magic(read_be32(lab.get(), labels_path), kIdxLabelMagic, labels_path);
  const std::uint32_t label_count = read_be32(lab.get(), labels_path);
  if (label_count != h.count) {
    throw IdxCountMismatch("IDX count mismatch: " + std::to_string(h.count) + " images vs " +
                           std::to_string(label_count) + " labels");
  }

  if (h.count == 0) throw IdxError("IDX file holds no samples: " + images_path);
  const std::size_t pixels = std::size_t{h.rows} * h.cols;
  if (pixels == 0) throw IdxError("IDX image with zero pixels: " + images_path);
  std::vector<unsigned char> raw(std::size_t{h.count} * pixels);
  read_exact(img.get(), raw.data(), raw.size(), images_path);
  std::vector<unsigned char> raw_labels(h.count);
  read_exact(lab.get(), raw_labels.data(), raw_labels.size(), labels_path);

  std::vector<double> features(raw.size());
  std::transform(raw.begin(), raw.end(), features.begin(),
                 [](unsigned char p) { return static_cast<double>(p) / 255.0; });
  std::vector<int> labels(raw_labels.begin(), raw_labels.end());
  if (num_classes == 0) {
    num_classes = static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end())) + 1;
  }
  return Dataset(pixels, num_classes, std::move(features), std::move(labels));
}

}  // namespace fda::learner
