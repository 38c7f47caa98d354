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

#include "fda/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "fda/errors.hpp"
#include "fda/seed.hpp"

namespace fda {
namespace {

constexpr std::uint64_t mod_mersenne31(std::uint64_t x) noexcept {
  x = (x & FourWiseHash::kPrime) + (x >> 31);
  x = (x & FourWiseHash::kPrime) + (x >> 31);
  return x >= FourWiseHash::kPrime ? x - FourWiseHash::kPrime : x;
}

void require_same_shape(const AmsSketch& a, const AmsSketch& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": sketch shape " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (a.transform_id() != b.transform_id()) {
    throw DimensionMismatch(std::string(what) + ": sketches from different transforms");
  }
}

}  // namespace

FourWiseHash::FourWiseHash(std::uint64_t c0, std::uint64_t c1, std::uint64_t c2,
                           std::uint64_t c3)
    : coeff_{c0 % kPrime, c1 % kPrime, c2 % kPrime, c3 % kPrime} {}

std::uint64_t FourWiseHash::operator()(std::uint64_t x) const noexcept {
  x = mod_mersenne31(x);
  // Horner; every intermediate stays below 2^62.
  std::uint64_t acc = coeff_[3];
  acc = mod_mersenne31(acc * x + coeff_[2]);
  acc = mod_mersenne31(acc * x + coeff_[1]);
  acc = mod_mersenne31(acc * x + coeff_[0]);
  return acc;
}

SketchTransform SketchTransform::make(std::size_t dim, std::size_t rows, std::size_t cols,
                                      std::uint64_t seed) {
  if (dim == 0 || rows == 0 || cols == 0) {
    throw std::invalid_argument("SketchTransform: dim, rows and cols must be >= 1");
  }
  if (dim >= FourWiseHash::kPrime) {
    throw std::invalid_argument("SketchTransform: dim exceeds hash domain");
  }
  SketchTransform t;
  t.dim_ = dim;
  t.rows_ = rows;
  t.cols_ = cols;
  t.seed_ = seed;
  t.id_ = derive_seed(seed, derive_seed(dim, rows, cols), 0x5EEDULL);
  t.buckets_.resize(rows * dim);
  t.signs_.resize(rows * dim);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coeff(0, FourWiseHash::kPrime - 1);
  for (std::size_t r = 0; r < rows; ++r) {
    const FourWiseHash bucket_hash(coeff(rng), coeff(rng), coeff(rng), coeff(rng));
    const FourWiseHash sign_hash(coeff(rng), coeff(rng), coeff(rng), coeff(rng));
    for (std::size_t j = 0; j < dim; ++j) {
      t.buckets_[r * dim + j] = static_cast<std::uint32_t>(bucket_hash(j) % cols);
      t.signs_[r * dim + j] = (sign_hash(j) & 1U) ? 1 : -1;
    }
  }
  return t;
}

SketchTransform SketchTransform::from_tables(std::size_t cols,
                                             std::vector<std::vector<std::uint32_t>> buckets,
                                             std::vector<std::vector<std::int8_t>> signs) {
  if (cols == 0 || buckets.empty() || buckets.size() != signs.size() ||
      buckets.front().empty()) {
    throw std::invalid_argument("SketchTransform::from_tables: bad table shape");
  }
  SketchTransform t;
  t.rows_ = buckets.size();
  t.dim_ = buckets.front().size();
  t.cols_ = cols;
  std::uint64_t id = 0xF1A5ULL;
  for (std::size_t r = 0; r < t.rows_; ++r) {
    if (buckets[r].size() != t.dim_ || signs[r].size() != t.dim_) {
      throw std::invalid_argument("SketchTransform::from_tables: ragged tables");
    }
    for (std::size_t j = 0; j < t.dim_; ++j) {
      if (buckets[r][j] >= cols) throw std::invalid_argument("from_tables: bucket out of range");
      if (signs[r][j] != 1 && signs[r][j] != -1) {
        throw std::invalid_argument("from_tables: sign must be +1 or -1");
      }
      t.buckets_.push_back(buckets[r][j]);
      t.signs_.push_back(signs[r][j]);
      id = splitmix64(id ^ (buckets[r][j] * 2 + (signs[r][j] > 0 ? 1 : 0)));
    }
  }
  t.id_ = id;
  return t;
}

AmsSketch SketchTransform::zero_sketch() const { return AmsSketch(rows_, cols_, id_); }

AmsSketch SketchTransform::apply(const ParamVector& v) const {
  require_same_size(v.size(), dim_, "SketchTransform::apply");
  AmsSketch out = zero_sketch();
  for (std::size_t r = 0; r < rows_; ++r) {
    const std::uint32_t* bucket = buckets_.data() + r * dim_;
    const std::int8_t* sign = signs_.data() + r * dim_;
    for (std::size_t j = 0; j < dim_; ++j) {
      out.at(r, bucket[j]) += sign[j] > 0 ? v[j] : -v[j];
    }
  }
  return out;
}

AmsSketch sketch_add(const AmsSketch& a, const AmsSketch& b) {
  require_same_shape(a, b, "sketch_add");
  AmsSketch out = a;
  auto dst = out.cells();
  auto src = b.cells();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return out;
}

AmsSketch sketch_scale(double alpha, const AmsSketch& a) {
  AmsSketch out = a;
  for (double& x : out.cells()) x *= alpha;
  return out;
}

AmsSketch sketch_average(std::span<const AmsSketch> sketches) {
  if (sketches.empty()) throw std::invalid_argument("sketch_average: empty list");
  AmsSketch out(sketches.front().rows(), sketches.front().cols(),
                sketches.front().transform_id());
  auto dst = out.cells();
  for (const auto& s : sketches) {
    require_same_shape(out, s, "sketch_average");
    auto src = s.cells();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  }
  const double inv = 1.0 / static_cast<double>(sketches.size());
  for (double& x : dst) x *= inv;
  return out;
}

double m2_estimate(const AmsSketch& s) {
  if (s.rows() == 0) throw std::invalid_argument("m2_estimate: sketch has no rows");
  std::vector<double> row_norms(s.rows());
  for (std::size_t r = 0; r < s.rows(); ++r) {
    double acc = 0.0;
    for (double x : s.row(r)) acc += x * x;
    row_norms[r] = acc;
  }
  std::sort(row_norms.begin(), row_norms.end());
  const std::size_t n = row_norms.size();
  if (n % 2 == 1) return row_norms[n / 2];
  return 0.5 * (row_norms[n / 2 - 1] + row_norms[n / 2]);
}

double sketch_epsilon(std::size_t cols) {
  if (cols == 0) throw std::invalid_argument("sketch_epsilon: cols must be >= 1");
  return 1.0 / std::sqrt(static_cast<double>(cols));
}

}  // namespace fda
