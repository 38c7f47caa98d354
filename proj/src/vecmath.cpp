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

#include "fda/vecmath.hpp"

#include <cmath>
#include <string>

#include "fda/errors.hpp"

namespace fda {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": length " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

double dot(const ParamVector& a, const ParamVector& b) {
  require_same_size(a.size(), b.size(), "dot");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm_sq(const ParamVector& v) {
  // Same loop as dot(v, v) so the two agree bit for bit.
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * v[i];
  return acc;
}

ParamVector average(std::span<const ParamVector> vs) {
  if (vs.empty()) throw std::invalid_argument("average: empty list");
  const std::size_t dim = vs.front().size();
  ParamVector out(dim);
  for (const auto& v : vs) {
    require_same_size(v.size(), dim, "average");
    for (std::size_t i = 0; i < dim; ++i) out[i] += v[i];
  }
  const double inv = 1.0 / static_cast<double>(vs.size());
  for (auto& x : out) x *= inv;
  return out;
}

ParamVector axpy(double alpha, const ParamVector& x, const ParamVector& y) {
  ParamVector out = y;
  axpy_inplace(alpha, x, out);
  return out;
}

void axpy_inplace(double alpha, const ParamVector& x, ParamVector& y) {
  require_same_size(x.size(), y.size(), "axpy");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

ParamVector scale(double alpha, const ParamVector& v) {
  ParamVector out = v;
  for (auto& x : out) x *= alpha;
  return out;
}

ParamVector add(const ParamVector& a, const ParamVector& b) {
  require_same_size(a.size(), b.size(), "add");
  ParamVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

ParamVector sub(const ParamVector& a, const ParamVector& b) {
  require_same_size(a.size(), b.size(), "sub");
  ParamVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

bool all_finite(const ParamVector& v) noexcept {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace fda
