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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fda {

/// Flat dense vector of model-space reals: parameters, drifts, gradients.
///
/// The length is fixed at construction. All reductions run in ascending
/// index order so results are bit-reproducible for a given input.
class ParamVector {
 public:
  ParamVector() = default;
  explicit ParamVector(std::size_t dim, double fill = 0.0) : values_(dim, fill) {}
  explicit ParamVector(std::vector<double> values) : values_(std::move(values)) {}
  ParamVector(std::initializer_list<double> values) : values_(values) {}

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  double& operator[](std::size_t i) noexcept { return values_[i]; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  double* data() noexcept { return values_.data(); }
  const double* data() const noexcept { return values_.data(); }

  std::span<double> span() noexcept { return values_; }
  std::span<const double> span() const noexcept { return values_; }

  auto begin() noexcept { return values_.begin(); }
  auto end() noexcept { return values_.end(); }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  const std::vector<double>& values() const noexcept { return values_; }

  bool operator==(const ParamVector&) const = default;

 private:
  std::vector<double> values_;
};

double dot(const ParamVector& a, const ParamVector& b);
double norm_sq(const ParamVector& v);

/// Elementwise mean, accumulated in list order. Throws on an empty list.
ParamVector average(std::span<const ParamVector> vs);

/// Returns alpha * x + y.
ParamVector axpy(double alpha, const ParamVector& x, const ParamVector& y);
/// y += alpha * x
void axpy_inplace(double alpha, const ParamVector& x, ParamVector& y);

ParamVector scale(double alpha, const ParamVector& v);
ParamVector add(const ParamVector& a, const ParamVector& b);
ParamVector sub(const ParamVector& a, const ParamVector& b);

bool all_finite(const ParamVector& v) noexcept;

/// Throws DimensionMismatch unless both lengths agree.
void require_same_size(std::size_t a, std::size_t b, const char* what);

}  // namespace fda
