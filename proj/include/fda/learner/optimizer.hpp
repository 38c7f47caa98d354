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
#include <string_view>

#include "fda/learner/dataset.hpp"
#include "fda/learner/model.hpp"
#include "fda/vecmath.hpp"

namespace fda::learner {

enum class OptimizerKind { Sgd, SgdMomentum, Adam, AdamW };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::Sgd;
  double learning_rate = 0.01;
  double momentum = 0.9;  // SgdMomentum
  bool nesterov = false;  // SgdMomentum
  double beta1 = 0.9;     // Adam, AdamW
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double weight_decay = 0.0;  // AdamW, decoupled

  /// Defaults for each kind (Adam: lr 1e-3, AdamW: lr 1e-3 and decay 4e-3).
  static OptimizerConfig defaults(OptimizerKind kind);

  bool operator==(const OptimizerConfig&) const = default;
};

/// Optimizer hyper-parameters plus slot vectors and step counter.
///
/// Update rules:
///   sgd:       w -= lr * g
///   momentum:  v = mu * v - lr * g;  w += v        (nesterov: w += mu * v - lr * g)
///   adam:      m = b1 m + (1-b1) g;  s = b2 s + (1-b2) g^2;
///              w -= lr * m_hat / (sqrt(s_hat) + eps), bias-corrected by step
///   adamw:     adam, then w -= lr * decay * w_prev
class OptimizerState {
 public:
  OptimizerState(OptimizerConfig config, std::size_t dim);

  void apply(ParamVector& params, const ParamVector& grad);

  const OptimizerConfig& config() const noexcept { return config_; }
  std::uint64_t steps() const noexcept { return steps_; }
  const ParamVector& first_slot() const noexcept { return slot1_; }
  const ParamVector& second_slot() const noexcept { return slot2_; }

 private:
  OptimizerConfig config_;
  std::uint64_t steps_ = 0;
  ParamVector slot1_;  // velocity or first moment
  ParamVector slot2_;  // second moment
};

/// One Optimize(w, B) step in place. Returns the batch loss at the
/// pre-update parameters.
double optimize_step(Model& model, OptimizerState& opt, const Batch& batch,
                     const Dataset& data);

std::string_view to_string(OptimizerKind kind) noexcept;

}  // namespace fda::learner
