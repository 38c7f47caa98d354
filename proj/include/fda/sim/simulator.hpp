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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fda/learner/dataset.hpp"
#include "fda/learner/model.hpp"
#include "fda/sim/ledger.hpp"
#include "fda/sim/partition.hpp"
#include "fda/sim/run_config.hpp"

namespace fda::sim {

/// Per-worker batch source. Each epoch the shard is reshuffled with a seed
/// derived from (batch seed, worker, epoch); batch s of the epoch takes
/// positions [s*b, s*b + b) of that order, wrapping around the shard.
class BatchSampler {
 public:
  BatchSampler(std::vector<std::size_t> shard, std::uint64_t batch_seed, std::size_t worker);

  learner::Batch batch(std::size_t epoch, std::size_t step_in_epoch, std::size_t batch_size);

 private:
  std::vector<std::size_t> shard_;
  std::vector<std::size_t> order_;
  std::uint64_t seed_;
  std::size_t worker_;
  std::optional<std::size_t> epoch_;
};

/// Steps in one epoch: one pass over the largest shard.
std::size_t steps_per_epoch(const Partition& part, std::size_t batch_size);

struct StepRecord {
  std::uint64_t step = 0;
  std::uint64_t epoch = 0;
  bool synced = false;
  std::optional<double> h;
  std::optional<double> variance;  // only with audit_variance
  double train_loss = 0.0;         // mean worker batch loss
  std::uint64_t bytes_cumulative = 0;

  bool operator==(const StepRecord&) const = default;
};

struct EpochRecord {
  std::uint64_t epoch = 0;
  double test_accuracy = 0.0;
  double test_loss = 0.0;
  double train_loss = 0.0;
  std::uint64_t bytes_total = 0;
  std::uint64_t bytes_state = 0;
  std::uint64_t bytes_sync = 0;
  std::uint64_t steps = 0;
  std::uint64_t syncs = 0;

  bool operator==(const EpochRecord&) const = default;
};

struct RunReport {
  std::string strategy;
  std::optional<double> theta;
  std::size_t workers = 0;
  std::size_t dim = 0;
  std::vector<StepRecord> steps;
  std::vector<EpochRecord> epochs;
  CostLedger ledger;
  bool reached_target = false;
  double final_accuracy = 0.0;
  /// Global model at the last evaluation.
  ParamVector final_model;

  std::uint64_t total_steps() const noexcept { return ledger.in_parallel_steps(); }
  std::uint64_t total_syncs() const noexcept { return ledger.sync_events(); }

  bool operator==(const RunReport&) const = default;
};

/// Read-only view of the simulation after each step. `pre_sync` holds the
/// worker models just before the model AllReduce on sync steps, else null.
struct StepView {
  const StepRecord& record;
  std::span<const learner::Model> workers;
  const std::vector<ParamVector>* pre_sync = nullptr;
};
using StepObserver = std::function<void(const StepView&)>;

/// Runs the full configuration, loading data as specified.
RunReport run(const RunConfig& config);

/// Runs on already-loaded data (config.dataset is ignored).
RunReport run(const RunConfig& config, const learner::Dataset& train,
              const learner::Dataset& test, const StepObserver& observer = {});

}  // namespace fda::sim
