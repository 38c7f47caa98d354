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
#include <string>
#include <variant>

#include "fda/core/strategy.hpp"
#include "fda/learner/dataset.hpp"
#include "fda/learner/model.hpp"
#include "fda/learner/optimizer.hpp"
#include "fda/sim/partition.hpp"

namespace fda::sim {

/// Synthetic train/test blobs drawn from the same class means.
struct BlobsSpec {
  std::size_t n = 6000;
  std::size_t features = 20;
  std::size_t classes = 3;
  double stddev = 1.0;
  std::size_t test_n = 1000;

  bool operator==(const BlobsSpec&) const = default;
};

struct IdxSpec {
  std::string train_images;
  std::string train_labels;
  std::string test_images;
  std::string test_labels;

  bool operator==(const IdxSpec&) const = default;
};

using DatasetSpec = std::variant<BlobsSpec, IdxSpec>;

struct ModelSpec {
  learner::ModelKind kind = learner::ModelKind::LogisticRegression;
  std::size_t hidden = 0;
  learner::InitScheme init = learner::InitScheme::GlorotUniform;

  bool operator==(const ModelSpec&) const = default;
};

struct OutputSpec {
  std::string metrics_csv;
  std::string events_jsonl;

  bool operator==(const OutputSpec&) const = default;
};

struct RunConfig {
  DatasetSpec dataset = BlobsSpec{};
  ModelSpec model;
  learner::OptimizerConfig optimizer = learner::OptimizerConfig::defaults(learner::OptimizerKind::Sgd);
  std::size_t workers = 5;
  std::size_t batch_size = 32;
  PartitionScheme partition = Iid{};
  core::SyncStrategy strategy = core::Synchronous{};
  double accuracy_target = 0.95;
  std::size_t max_epochs = 50;
  std::uint64_t seed = 0;
  /// Recompute exact model variance every step over the uncharged oracle channel.
  bool audit_variance = false;
  OutputSpec output;

  bool operator==(const RunConfig&) const = default;
};

/// Throws ConfigError on inconsistent settings.
void validate(const RunConfig& config);

struct LoadedData {
  learner::Dataset train;
  learner::Dataset test;
};

/// Blobs are generated from sub-seeds of `run_seed`; IDX files are read.
LoadedData load_data(const DatasetSpec& spec, std::uint64_t run_seed);

/// Model dimensions implied by the config and the training data.
learner::ModelDims model_dims(const ModelSpec& spec, const learner::Dataset& train);

}  // namespace fda::sim
