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
#include <optional>
#include <string>
#include <variant>

#include "fda/learner/optimizer.hpp"
#include "fda/vecmath.hpp"

namespace fda::core {

/// Variance-triggered sync with AMS-sketch summaries.
struct SketchFda {
  double theta = 0.0;
  std::size_t rows = 5;
  std::size_t cols = 250;
  /// Shared transform seed; derived from the run seed when unset.
  std::optional<std::uint64_t> seed;

  bool operator==(const SketchFda&) const = default;
};

/// Variance-triggered sync with scalar-projection summaries.
struct LinearFda {
  double theta = 0.0;

  bool operator==(const LinearFda&) const = default;
};

/// Average after every step.
struct Synchronous {
  bool operator==(const Synchronous&) const = default;
};

/// Average every `tau` steps.
struct LocalSgd {
  std::size_t tau = 1;

  bool operator==(const LocalSgd&) const = default;
};

/// Server-side SGD with momentum on the pseudo-gradient (FedAvgM).
struct ServerMomentum {
  double momentum = 0.9;
  double learning_rate = 0.316;

  bool operator==(const ServerMomentum&) const = default;
};

/// Server-side Adam on the pseudo-gradient (FedAdam).
struct ServerAdam {
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-7;

  bool operator==(const ServerAdam&) const = default;
};

/// Federated optimization: E local epochs, then one server step.
struct FedOpt {
  std::variant<ServerMomentum, ServerAdam> server;
  std::size_t local_epochs = 1;

  bool operator==(const FedOpt&) const = default;
};

using SyncStrategy = std::variant<SketchFda, LinearFda, Synchronous, LocalSgd, FedOpt>;

/// Throws std::invalid_argument on theta < 0, tau < 1, E < 1, zero sketch size.
void validate(const SyncStrategy& strategy);

/// "SketchFDA", "LinearFDA", "Synchronous", "LocalSGD", "FedAvgM" or "FedAdam".
std::string strategy_name(const SyncStrategy& strategy);

/// Theta for the FDA variants.
std::optional<double> strategy_theta(const SyncStrategy& strategy);

/// True for FDA variants with theta > 0: only these exchange local states.
/// Theta == 0 degenerates to Synchronous and the state round is elided.
bool exchanges_state(const SyncStrategy& strategy);

/// What the simulator knows when deciding whether to synchronize.
struct SyncContext {
  std::optional<double> h;              // FDA: estimator value this step
  std::size_t steps_since_sync = 0;     // counted after this step's update
  std::size_t epochs_since_sync = 0;    // completed epochs, counting this one
  bool epoch_end = false;
};

/// FDA: H > theta (strict), or always when theta == 0. Synchronous: always.
/// LocalSGD: steps_since_sync == tau. FedOpt: at the end of E local epochs.
bool should_sync(const SyncStrategy& strategy, const SyncContext& ctx);

/// Server optimizer state for FedOpt rounds.
class ServerOptimizer {
 public:
  ServerOptimizer(const FedOpt& strategy, std::size_t dim);
  ServerOptimizer(const std::variant<ServerMomentum, ServerAdam>& server, std::size_t dim);

  const learner::OptimizerState& state() const noexcept { return state_; }
  learner::OptimizerState& state() noexcept { return state_; }

 private:
  learner::OptimizerState state_;
};

/// Applies the server optimizer to the pseudo-gradient -mean_client_delta.
/// Momentum server with lr 1 and momentum 0 reduces to FedAvg.
ParamVector fedopt_server_update(const ParamVector& global, const ParamVector& mean_client_delta,
                                 ServerOptimizer& server);

}  // namespace fda::core
