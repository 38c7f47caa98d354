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
#include <string_view>

#include "fda/learner/dataset.hpp"
#include "fda/vecmath.hpp"

namespace fda::learner {

enum class ModelKind { LogisticRegression, Mlp };
enum class InitScheme { GlorotUniform, HeNormal };

struct ModelDims {
  std::size_t inputs = 0;
  std::size_t classes = 0;
  std::size_t hidden = 0;  // Mlp only

  bool operator==(const ModelDims&) const = default;
};

/// Parameter layout, flattened in this order:
///   LogisticRegression: W (classes x inputs, row-major), b (classes)
///   Mlp: W1 (hidden x inputs), b1 (hidden), W2 (classes x hidden), b2 (classes)
std::size_t param_count(ModelKind kind, const ModelDims& dims);

/// Softmax classifier: logistic regression or one ReLU hidden layer.
class Model {
 public:
  /// All-zero parameters (uniform logits). Throws on invalid dims.
  Model(ModelKind kind, ModelDims dims);
  /// Takes ownership of `params`; its length must match the layout.
  Model(ModelKind kind, ModelDims dims, ParamVector params);

  ModelKind kind() const noexcept { return kind_; }
  const ModelDims& dims() const noexcept { return dims_; }
  ParamVector& params() noexcept { return params_; }
  const ParamVector& params() const noexcept { return params_; }

  /// Class probabilities for one input row; `probs` has dims().classes slots.
  void predict_proba(std::span<const double> x, std::span<double> probs) const;

 private:
  ModelKind kind_;
  ModelDims dims_;
  ParamVector params_;
};

/// Weights from the chosen scheme, biases zero. Deterministic in `seed`.
Model init_model(ModelKind kind, const ModelDims& dims, InitScheme scheme, std::uint64_t seed);

struct LossAndGrad {
  double loss = 0.0;
  ParamVector grad;
};

/// Mean cross-entropy over the batch and its exact gradient.
LossAndGrad loss_and_grad(const Model& model, const Batch& batch, const Dataset& data);

/// Forward pass only.
double batch_loss(const Model& model, const Batch& batch, const Dataset& data);

struct Evaluation {
  double loss = 0.0;
  double accuracy = 0.0;
};

/// Argmax accuracy; ties go to the lowest class index.
Evaluation evaluate(const Model& model, const Dataset& data);

std::string_view to_string(ModelKind kind) noexcept;
std::string_view to_string(InitScheme scheme) noexcept;

}  // namespace fda::learner
