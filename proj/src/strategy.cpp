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

#include "fda/core/strategy.hpp"

#include <stdexcept>

#include "fda/detail/overloaded.hpp"

namespace fda::core {
namespace {

using detail::Overloaded;

void require_theta(double theta) {
  if (!(theta >= 0.0)) throw std::invalid_argument("theta must be >= 0");
}

learner::OptimizerConfig server_config(const std::variant<ServerMomentum, ServerAdam>& server) {
  return std::visit(
      Overloaded{
          [](const ServerMomentum& s) {
            learner::OptimizerConfig c;
            c.kind = learner::OptimizerKind::SgdMomentum;
            c.learning_rate = s.learning_rate;
            c.momentum = s.momentum;
            return c;
          },
          [](const ServerAdam& s) {
            learner::OptimizerConfig c;
            c.kind = learner::OptimizerKind::Adam;
            c.learning_rate = s.learning_rate;
            c.beta1 = s.beta1;
            c.beta2 = s.beta2;
            c.epsilon = s.epsilon;
            return c;
          },
      },
      server);
}

}  // namespace

void validate(const SyncStrategy& strategy) {
  std::visit(Overloaded{
                 [](const SketchFda& s) {
                   require_theta(s.theta);
                   if (s.rows == 0 || s.cols == 0) {
                     throw std::invalid_argument("sketch rows and cols must be >= 1");
                   }
                 },
                 [](const LinearFda& s) { require_theta(s.theta); },
                 [](const Synchronous&) {},
                 [](const LocalSgd& s) {
                   if (s.tau < 1) throw std::invalid_argument("local_sgd tau must be >= 1");
                 },
                 [](const FedOpt& s) {
                   if (s.local_epochs < 1) throw std::invalid_argument("fedopt E must be >= 1");
                 },
             },
             strategy);
}

std::string strategy_name(const SyncStrategy& strategy) {
  return std::visit(Overloaded{
                        [](const SketchFda&) -> std::string { return "SketchFDA"; },
                        [](const LinearFda&) -> std::string { return "LinearFDA"; },
                        [](const Synchronous&) -> std::string { return "Synchronous"; },
                        [](const LocalSgd&) -> std::string { return "LocalSGD"; },
                        [](const FedOpt& f) -> std::string {
                          return std::holds_alternative<ServerMomentum>(f.server) ? "FedAvgM"
                                                                                  : "FedAdam";
                        },
                    },
                    strategy);
}

std::optional<double> strategy_theta(const SyncStrategy& strategy) {
  if (const auto* s = std::get_if<SketchFda>(&strategy)) return s->theta;
  if (const auto* s = std::get_if<LinearFda>(&strategy)) return s->theta;
  return std::nullopt;
}

bool exchanges_state(const SyncStrategy& strategy) {
  const auto theta = strategy_theta(strategy);
  return theta.has_value() && *theta > 0.0;
}

bool should_sync(const SyncStrategy& strategy, const SyncContext& ctx) {
  return std::visit(
      Overloaded{
          [&](const SketchFda& s) { return s.theta == 0.0 || (ctx.h && *ctx.h > s.theta); },
          [&](const LinearFda& s) { return s.theta == 0.0 || (ctx.h && *ctx.h > s.theta); },
          [](const Synchronous&) { return true; },
          [&](const LocalSgd& s) { return ctx.steps_since_sync == s.tau; },
          [&](const FedOpt& s) { return ctx.epoch_end && ctx.epochs_since_sync >= s.local_epochs; },
      },
      strategy);
}

ServerOptimizer::ServerOptimizer(const FedOpt& strategy, std::size_t dim)
    : ServerOptimizer(strategy.server, dim) {}

ServerOptimizer::ServerOptimizer(const std::variant<ServerMomentum, ServerAdam>& server,
                                 std::size_t dim)
    : state_(server_config(server), dim) {}

ParamVector fedopt_server_update(const ParamVector& global, const ParamVector& mean_client_delta,
                                 ServerOptimizer& server) {
  require_same_size(global.size(), mean_client_delta.size(), "fedopt_server_update");
  ParamVector next = global;
  server.state().apply(next, scale(-1.0, mean_client_delta));
  return next;
}

}  // namespace fda::core
