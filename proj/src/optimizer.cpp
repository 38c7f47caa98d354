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

#include "fda/learner/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace fda::learner {

OptimizerConfig OptimizerConfig::defaults(OptimizerKind kind) {
  OptimizerConfig c;
  c.kind = kind;
  switch (kind) {
    case OptimizerKind::Sgd:
    case OptimizerKind::SgdMomentum:
      c.learning_rate = 0.01;
      break;
    case OptimizerKind::Adam:
      c.learning_rate = 0.001;
      break;
    case OptimizerKind::AdamW:
      c.learning_rate = 0.001;
      c.weight_decay = 0.004;
      break;
  }
  return c;
}

OptimizerState::OptimizerState(OptimizerConfig config, std::size_t dim) : config_(config) {
  if (!(config_.learning_rate >= 0.0)) throw std::invalid_argument("learning rate must be >= 0");
  switch (config_.kind) {
    case OptimizerKind::Sgd:
      break;
    case OptimizerKind::SgdMomentum:
      slot1_ = ParamVector(dim);
      break;
    case OptimizerKind::Adam:
    case OptimizerKind::AdamW:
      slot1_ = ParamVector(dim);
      slot2_ = ParamVector(dim);
      break;
  }
}

void OptimizerState::apply(ParamVector& params, const ParamVector& grad) {
  require_same_size(params.size(), grad.size(), "OptimizerState::apply");
  const double lr = config_.learning_rate;
  ++steps_;
  switch (config_.kind) {
    case OptimizerKind::Sgd:
      for (std::size_t i = 0; i < params.size(); ++i) params[i] -= lr * grad[i];
      return;
    case OptimizerKind::SgdMomentum: {
      require_same_size(params.size(), slot1_.size(), "OptimizerState::apply");
      const double mu = config_.momentum;
      for (std::size_t i = 0; i < params.size(); ++i) {
        slot1_[i] = mu * slot1_[i] - lr * grad[i];
        params[i] += config_.nesterov ? mu * slot1_[i] - lr * grad[i] : slot1_[i];
      }
      return;
    }
    case OptimizerKind::Adam:
    case OptimizerKind::AdamW: {
      require_same_size(params.size(), slot1_.size(), "OptimizerState::apply");
      const double b1 = config_.beta1;
      const double b2 = config_.beta2;
      const double t = static_cast<double>(steps_);
      const double c1 = 1.0 - std::pow(b1, t);
      const double c2 = 1.0 - std::pow(b2, t);
      const double decay = config_.kind == OptimizerKind::AdamW ? lr * config_.weight_decay : 0.0;
      for (std::size_t i = 0; i < params.size(); ++i) {
        slot1_[i] = b1 * slot1_[i] + (1.0 - b1) * grad[i];
        slot2_[i] = b2 * slot2_[i] + (1.0 - b2) * grad[i] * grad[i];
        const double m_hat = slot1_[i] / c1;
        const double s_hat = slot2_[i] / c2;
        const double w_prev = params[i];
        params[i] -= lr * m_hat / (std::sqrt(s_hat) + config_.epsilon);
        params[i] -= decay * w_prev;
      }
      return;
    }
  }
}

double optimize_step(Model& model, OptimizerState& opt, const Batch& batch,
                     const Dataset& data) {
  auto [loss, grad] = loss_and_grad(model, batch, data);
  opt.apply(model.params(), grad);
  return loss;
}

std::string_view to_string(OptimizerKind kind) noexcept {
  switch (kind) {
    case OptimizerKind::Sgd:
      return "sgd";
    case OptimizerKind::SgdMomentum:
      return "sgd_momentum";
    case OptimizerKind::Adam:
      return "adam";
    case OptimizerKind::AdamW:
      return "adamw";
  }
  return "?";
}

}  // namespace fda::learner
