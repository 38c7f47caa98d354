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

#include "fda/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "fda/core/strategy.hpp"
#include "fda/core/variance.hpp"
#include "fda/errors.hpp"
#include "fda/learner/model.hpp"
#include "fda/learner/optimizer.hpp"
#include "fda/seed.hpp"
#include "fda/sketch.hpp"

namespace fda::sim {
namespace {

std::vector<ParamVector> gather(const std::vector<learner::Model>& models) {
  std::vector<ParamVector> out;
  out.reserve(models.size());
  for (const auto& m : models) out.push_back(m.params());
  return out;
}

}  // namespace

BatchSampler::BatchSampler(std::vector<std::size_t> shard, std::uint64_t batch_seed,
                           std::size_t worker)
    : shard_(std::move(shard)), seed_(batch_seed), worker_(worker) {
  if (shard_.empty()) throw std::invalid_argument("BatchSampler: empty shard");
}

learner::Batch BatchSampler::batch(std::size_t epoch, std::size_t step_in_epoch,
                                   std::size_t batch_size) {
  if (!epoch_ || *epoch_ != epoch) {
    order_ = shard_;
    std::mt19937_64 rng(derive_seed(seed_, worker_, epoch));
    std::shuffle(order_.begin(), order_.end(), rng);
    epoch_ = epoch;
  }
  learner::Batch b;
  b.indices.reserve(batch_size);
  const std::size_t start = step_in_epoch * batch_size;
  for (std::size_t i = 0; i < batch_size; ++i) b.indices.push_back(order_[(start + i) % order_.size()]);
  return b;
}

std::size_t steps_per_epoch(const Partition& part, std::size_t batch_size) {
  const std::size_t largest = part.largest_shard();
  return (largest + batch_size - 1) / batch_size;
}

RunReport run(const RunConfig& config) {
  validate(config);
  const LoadedData data = load_data(config.dataset, config.seed);
  return run(config, data.train, data.test);
}

RunReport run(const RunConfig& config, const learner::Dataset& train,
              const learner::Dataset& test, const StepObserver& observer) {
  validate(config);
  const std::size_t workers = config.workers;
  const std::size_t batch_size = config.batch_size;
  const auto& strategy = config.strategy;

  const Partition part =
      partition(train, workers, config.partition, derive_seed(config.seed, "partition"));
  std::vector<BatchSampler> samplers;
  samplers.reserve(workers);
  const std::uint64_t batch_seed = derive_seed(config.seed, "batches");
  for (std::size_t k = 0; k < workers; ++k) samplers.emplace_back(part.shards[k], batch_seed, k);
  const std::size_t epoch_steps = steps_per_epoch(part, batch_size);

  const learner::ModelDims dims = model_dims(config.model, train);
  const learner::Model initial = learner::init_model(config.model.kind, dims, config.model.init,
                                                     derive_seed(config.seed, "init"));
  const std::size_t dim = initial.params().size();
  std::vector<learner::Model> models(workers, initial);
  std::vector<learner::OptimizerState> opts(workers,
                                            learner::OptimizerState(config.optimizer, dim));

  RunReport report;
  report.strategy = core::strategy_name(strategy);
  report.theta = core::strategy_theta(strategy);
  report.workers = workers;
  report.dim = dim;

  // The initial broadcast is the first synchronization point.
  ParamVector w_sync = initial.params();
  core::Xi xi = core::Xi::absent();
  const bool monitor = core::exchanges_state(strategy);
  const auto* sketch_cfg = std::get_if<core::SketchFda>(&strategy);
  std::optional<SketchTransform> transform;
  double eps = 0.0;
  if (monitor && sketch_cfg != nullptr) {
    transform = SketchTransform::make(dim, sketch_cfg->rows, sketch_cfg->cols,
                                      sketch_cfg->seed.value_or(derive_seed(config.seed, "sketch")));
    eps = sketch_epsilon(sketch_cfg->cols);
  }

  const auto* fedopt = std::get_if<core::FedOpt>(&strategy);
  std::optional<core::ServerOptimizer> server;
  ParamVector global = initial.params();
  if (fedopt != nullptr) server.emplace(*fedopt, dim);

  CostLedger& ledger = report.ledger;
  std::uint64_t step = 0;
  std::size_t steps_since_sync = 0;
  std::size_t epochs_since_sync = 0;
  std::vector<core::LocalState> states(workers);

  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    double epoch_loss = 0.0;
    for (std::size_t s = 0; s < epoch_steps; ++s) {
      ++step;
      const bool epoch_end = s + 1 == epoch_steps;

      double loss_acc = 0.0;
      for (std::size_t k = 0; k < workers; ++k) {
        const learner::Batch batch = samplers[k].batch(epoch, s, batch_size);
        const double loss = learner::optimize_step(models[k], opts[k], batch, train);
        if (!std::isfinite(loss)) {
          throw DivergenceError("non-finite loss at step " + std::to_string(step) + " on worker " +
                                std::to_string(k));
        }
        loss_acc += loss;
      }
      ledger.add_steps();
      ++steps_since_sync;

      StepRecord rec;
      rec.step = step;
      rec.epoch = epoch;
      rec.train_loss = loss_acc / static_cast<double>(workers);
      epoch_loss += rec.train_loss;

      if (monitor) {
        for (std::size_t k = 0; k < workers; ++k) {
          const ParamVector drift = sub(models[k].params(), w_sync);
          states[k] = transform ? core::make_local_state_sketch(drift, *transform)
                                : core::make_local_state_linear(drift, xi);
        }
        const core::AveragedState avg = allreduce_states(states, ledger, step);
        rec.h = transform ? core::h_sketch(avg, eps) : core::h_linear(avg);
      }
      if (config.audit_variance) {
        const auto snapshot = gather(models);
        rec.variance = core::variance_exact(snapshot);
      }

      core::SyncContext ctx;
      ctx.h = rec.h;
      ctx.steps_since_sync = steps_since_sync;
      ctx.epochs_since_sync = epochs_since_sync + (epoch_end ? 1 : 0);
      ctx.epoch_end = epoch_end;

      std::vector<ParamVector> pre_sync;
      if (core::should_sync(strategy, ctx)) {
        const auto snapshot = gather(models);
        if (observer) pre_sync = snapshot;
        ParamVector mean = allreduce_average(snapshot, ledger, Traffic::ModelSync, step);
        if (server) {
          global = core::fedopt_server_update(global, sub(mean, global), *server);
          mean = global;
        }
        if (!all_finite(mean)) {
          throw DivergenceError("non-finite parameters after sync at step " + std::to_string(step));
        }
        for (auto& m : models) m.params() = mean;
        if (std::holds_alternative<core::LinearFda>(strategy)) xi = core::compute_xi(mean, w_sync);
        w_sync = std::move(mean);
        steps_since_sync = 0;
        epochs_since_sync = 0;
        rec.synced = true;
      } else if (epoch_end) {
        ++epochs_since_sync;
      }

      rec.bytes_cumulative = ledger.bytes_total();
      report.steps.push_back(rec);
      if (observer) observer(StepView{rec, models, rec.synced ? &pre_sync : nullptr});
    }

    // Global model over the oracle channel: not charged to the ledger.
    learner::Model global_model(config.model.kind, dims,
                                server ? global : average(gather(models)));
    const learner::Evaluation ev = learner::evaluate(global_model, test);

    EpochRecord er;
    er.epoch = epoch;
    er.test_accuracy = ev.accuracy;
    er.test_loss = ev.loss;
    er.train_loss = epoch_loss / static_cast<double>(epoch_steps);
    er.bytes_total = ledger.bytes_total();
    er.bytes_state = ledger.bytes_state();
    er.bytes_sync = ledger.bytes_sync();
    er.steps = ledger.in_parallel_steps();
    er.syncs = ledger.sync_events();
    report.epochs.push_back(er);
    report.final_accuracy = ev.accuracy;
    report.final_model = global_model.params();

    if (ev.accuracy >= config.accuracy_target) {
      report.reached_target = true;
      break;
    }
  }
  return report;
}

}  // namespace fda::sim
