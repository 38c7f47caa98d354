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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fda::learner {

/// n x p feature matrix (row-major) with integer labels in [0, num_classes).
class Dataset {
 public:
  Dataset() = default;
  /// Throws std::invalid_argument on shape errors, out-of-range labels or
  /// non-finite features.
  Dataset(std::size_t num_features, std::size_t num_classes, std::vector<double> features,
          std::vector<int> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t num_features() const noexcept { return num_features_; }
  std::size_t num_classes() const noexcept { return num_classes_; }

  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(features_).subspan(i * num_features_, num_features_);
  }
  int label(std::size_t i) const noexcept { return labels_[i]; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  const std::vector<double>& features() const noexcept { return features_; }

  /// Rows selected by index, in the given order.
  Dataset subset(std::span<const std::size_t> indices) const;

  bool operator==(const Dataset&) const = default;

 private:
  std::size_t num_features_ = 0;
  std::size_t num_classes_ = 0;
  std::vector<double> features_;
  std::vector<int> labels_;
};

/// Sample indices into a Dataset.
struct Batch {
  std::vector<std::size_t> indices;

  std::size_t size() const noexcept { return indices.size(); }
  /// Throws std::out_of_range if empty or any index >= n.
  void validate(std::size_t n) const;
};

/// Gaussian clusters. Sample i has label i mod classes; class c is centred
/// at c * (1, ..., 1) so neighbouring means are one unit apart in every
/// coordinate. Noise is isotropic with standard deviation `stddev`.
Dataset make_blobs(std::size_t n, std::size_t num_features, std::size_t num_classes,
                   std::uint64_t seed, double stddev = 1.0);

}  // namespace fda::learner
