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

// AMS sketching of model-space vectors.
//
// A SketchTransform is a seeded linear map R^d -> R^{l x m}. Row i sends
// coordinate j to bucket h_i(j) with sign s_i(j); both hashes are degree-3
// polynomials over GF(2^31 - 1), which makes them 4-wise independent. The
// squared norm of the input is estimated by the median of the squared row
// norms.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fda/vecmath.hpp"

namespace fda {

/// Degree-3 polynomial hash modulo the Mersenne prime 2^31 - 1.
class FourWiseHash {
 public:
  static constexpr std::uint64_t kPrime = (1ULL << 31) - 1;

  FourWiseHash() = default;
  FourWiseHash(std::uint64_t c0, std::uint64_t c1, std::uint64_t c2, std::uint64_t c3);

  /// Value in [0, kPrime).
  std::uint64_t operator()(std::uint64_t x) const noexcept;

 private:
  std::uint64_t coeff_[4] = {0, 0, 0, 0};
};

class AmsSketch;

class SketchTransform {
 public:
  /// Deterministic in (dim, rows, cols, seed). Throws on zero sizes.
  static SketchTransform make(std::size_t dim, std::size_t rows, std::size_t cols,
                              std::uint64_t seed);

  /// Transform with explicitly pinned hash tables; buckets[i][j] in [0, cols),
  /// signs[i][j] in {-1, +1}. Mostly useful for hand-checked examples.
  static SketchTransform from_tables(std::size_t cols,
                                     std::vector<std::vector<std::uint32_t>> buckets,
                                     std::vector<std::vector<std::int8_t>> signs);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t seed() const noexcept { return seed_; }
  /// Identity shared by every sketch this transform produces.
  std::uint64_t id() const noexcept { return id_; }

  std::uint32_t bucket(std::size_t row, std::size_t j) const noexcept {
    return buckets_[row * dim_ + j];
  }
  int sign(std::size_t row, std::size_t j) const noexcept { return signs_[row * dim_ + j]; }

  /// O(rows * dim).
  AmsSketch apply(const ParamVector& v) const;

  AmsSketch zero_sketch() const;

  /// Wire size of one sketch at 4 bytes per entry.
  std::size_t payload_bytes() const noexcept { return rows_ * cols_ * 4; }

 private:
  SketchTransform() = default;

  std::size_t dim_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint64_t seed_ = 0;
  std::uint64_t id_ = 0;
  std::vector<std::uint32_t> buckets_;  // rows x dim
  std::vector<std::int8_t> signs_;      // rows x dim
};

/// rows x cols matrix of signed bucket sums, stored row-major.
class AmsSketch {
 public:
  AmsSketch() = default;
  AmsSketch(std::size_t rows, std::size_t cols, std::uint64_t transform_id)
      : rows_(rows), cols_(cols), transform_id_(transform_id), cells_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t transform_id() const noexcept { return transform_id_; }

  double& at(std::size_t r, std::size_t c) noexcept { return cells_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const noexcept { return cells_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const noexcept {
    return std::span<const double>(cells_).subspan(r * cols_, cols_);
  }
  std::span<const double> cells() const noexcept { return cells_; }
  std::span<double> cells() noexcept { return cells_; }

  bool operator==(const AmsSketch&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint64_t transform_id_ = 0;
  std::vector<double> cells_;
};

AmsSketch sketch_add(const AmsSketch& a, const AmsSketch& b);
AmsSketch sketch_scale(double alpha, const AmsSketch& a);
/// Elementwise mean in list order.
AmsSketch sketch_average(std::span<const AmsSketch> sketches);

/// Median over rows of the squared row norm. For an even row count the two
/// middle order statistics are averaged.
double m2_estimate(const AmsSketch& s);

/// Error parameter used to deflate M2 estimates: 1 / sqrt(cols).
double sketch_epsilon(std::size_t cols);

}  // namespace fda
