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

#include <gtest/gtest.h>
#include <zlib.h>

#include <cstdint>
#include <string>
#include <vector>

#include "test_util.hpp"

namespace fda::learner {
namespace {

using testing::TempDir;

void put_be32(std::string& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((v >> shift) & 0xFF));
}

std::string image_file(std::uint32_t count, std::uint32_t rows, std::uint32_t cols,
                       const std::vector<std::uint8_t>& pixels, std::uint32_t magic = kIdxImageMagic) {
  std::string out;
  put_be32(out, magic);
  put_be32(out, count);
  put_be32(out, rows);
  put_be32(out, cols);
  out.append(pixels.begin(), pixels.end());
  return out;
}

std::string label_file(const std::vector<std::uint8_t>& labels, std::uint32_t magic = kIdxLabelMagic) {
  std::string out;
  put_be32(out, magic);
  put_be32(out, static_cast<std::uint32_t>(labels.size()));
  out.append(labels.begin(), labels.end());
  return out;
}

void write_gzip(const std::filesystem::path& p, const std::string& content) {
  gzFile f = gzopen(p.string().c_str(), "wb");
  ASSERT_NE(f, nullptr);
  ASSERT_EQ(gzwrite(f, content.data(), static_cast<unsigned>(content.size())),
            static_cast<int>(content.size()));
  gzclose(f);
}

class IdxTest : public ::testing::Test {
 protected:
  TempDir dir{"idx"};
  const std::vector<std::uint8_t> pixels = {0, 255, 51, 102, 0, 0, 255, 255};  // 2 images of 2x2
  const std::vector<std::uint8_t> labels = {3, 1};
};

TEST_F(IdxTest, ReadsRawFiles) {
  testing::write_file(dir / "img", image_file(2, 2, 2, pixels));
  testing::write_file(dir / "lab", label_file(labels));
  const Dataset d = load_idx((dir / "img").string(), (dir / "lab").string());
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.num_features(), 4u);
  EXPECT_EQ(d.num_classes(), 4u);  // inferred as max label + 1
  EXPECT_DOUBLE_EQ(d.row(0)[1], 1.0);
  EXPECT_DOUBLE_EQ(d.row(0)[2], 0.2);
  EXPECT_EQ(d.label(0), 3);
  const auto hdr = read_idx_image_header((dir / "img").string());
  EXPECT_EQ(hdr.count, 2u);
  EXPECT_EQ(hdr.rows, 2u);
}

TEST_F(IdxTest, ReadsGzipFiles) {
  write_gzip(dir / "img.gz", image_file(2, 2, 2, pixels));
  write_gzip(dir / "lab.gz", label_file(labels));
  const Dataset d = load_idx((dir / "img.gz").string(), (dir / "lab.gz").string(), 10);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.num_classes(), 10u);
  EXPECT_DOUBLE_EQ(d.row(1)[3], 1.0);
}

TEST_F(IdxTest, BadMagic) {
  testing::write_file(dir / "img", image_file(2, 2, 2, pixels, 0x00000801));
  testing::write_file(dir / "lab", label_file(labels));
  EXPECT_THROW(load_idx((dir / "img").string(), (dir / "lab").string()), IdxBadMagic);
  testing::write_file(dir / "img", image_file(2, 2, 2, pixels));
  testing::write_file(dir / "lab", label_file(labels, 0x00000803));
  EXPECT_THROW(load_idx((dir / "img").string(), (dir / "lab").string()), IdxBadMagic);
}

TEST_F(IdxTest, Truncated) {
  std::string img = image_file(2, 2, 2, pixels);
  img.pop_back();
  testing::write_file(dir / "img", img);
  testing::write_file(dir / "lab", label_file(labels));
  EXPECT_THROW(load_idx((dir / "img").string(), (dir / "lab").string()), IdxTruncated);
  testing::write_file(dir / "short", std::string("\x00\x00", 2));
  EXPECT_THROW(read_idx_labels((dir / "short").string()), IdxTruncated);
}

TEST_F(IdxTest, CountMismatch) {
  testing::write_file(dir / "img", image_file(2, 2, 2, pixels));
  testing::write_file(dir / "lab", label_file({1, 2, 0}));
  EXPECT_THROW(load_idx((dir / "img").string(), (dir / "lab").string()), IdxCountMismatch);
}

TEST_F(IdxTest, MissingFile) {
  EXPECT_THROW(load_idx((dir / "nope").string(), (dir / "nope2").string()), IdxOpenError);
}

}  // namespace
}  // namespace fda::learner
