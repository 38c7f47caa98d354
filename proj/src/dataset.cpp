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

#include "fda/learner/dataset.hpp"

#include <cmath>
#include <random>
#include <string>

namespace fda::learner {

Dataset::Dataset(std::size_t num_features, std::size_t num_classes,
                 std::vector<double> features, std::vector<int> labels)
    : num_features_(num_features),
      num_classes_(num_classes),
      features_(std::move(features)),
      labels_(std::move(labels)) {
  if (num_features_ == 0 || num_classes_ == 0) {
    throw std::invalid_argument("Dataset: num_features and num_classes must be >= 1");
  }
  if (labels_.empty()) throw std::invalid_argument("Dataset: no samples");
  if (features_.size() != labels_.size() * num_features_) {
    throw std::invalid_argument("Dataset: feature matrix is " + std::to_string(features_.size()) +
                                " values, expected " +
                                std::to_string(labels_.size() * num_features_));
  }
  for (int y : labels_) {
    if (y < 0 || static_cast<std::size_t>(y) >= num_classes_) {
      throw std::invalid_argument("Dataset: label " + std::to_string(y) + " out of range");
    }
  }
  for (double x : features_) {
    if (!std::isfinite(x)) throw std::invalid_argument("Dataset: non-finite feature");
  }
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  std::vector<double> features;
  std::vector<int> labels;
  features.reserve(indices.size() * num_features_);
  labels.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= size()) throw std::out_of_range("Dataset::subset: index out of range");
    auto r = row(i);
    features.insert(features.end(), r.begin(), r.end());
    labels.push_back(labels_[i]);
  }
  return Dataset(num_features_, num_classes_, std::move(features), std::move(labels));
}

void Batch::validate(std::size_t n) const {
  if (indices.empty()) throw std::out_of_range("Batch: empty");
  for (std::size_t i : indices) {
    if (i >= n) throw std::out_of_range("Batch: index " + std::to_string(i) + " >= " + std::to_string(n));
  }
}

Dataset make_blobs(std::size_t n, std::size_t num_features, std::size_t num_classes,
                   std::uint64_t seed, double stddev) {
  if (n == 0 || num_features == 0 || num_classes == 0) {
    throw std::invalid_argument("make_blobs: n, features and classes must be >= 1");
  }
  if (!(stddev >= 0.0) || !std::isfinite(stddev)) {
    throw std::invalid_argument("make_blobs: stddev must be finite and >= 0");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<double> features(n * num_features);
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int label = static_cast<int>(i % num_classes);
    labels[i] = label;
    for (std::size_t j = 0; j < num_features; ++j) {
      features[i * num_features + j] = static_cast<double>(label) + stddev * noise(rng);
    }
  }
  return Dataset(num_features, num_classes, std::move(features), std::move(labels));
}

}  // namespace fda::learner
