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

#include "fda/learner/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace fda::learner {
namespace {

void validate_dims(ModelKind kind, const ModelDims& dims) {
  if (dims.inputs == 0 || dims.classes < 2) {
    throw std::invalid_argument("model needs inputs >= 1 and classes >= 2");
  }
  if (kind == ModelKind::Mlp && dims.hidden == 0) {
    throw std::invalid_argument("mlp needs hidden >= 1");
  }
}

// In-place softmax; returns log-sum-exp of the input logits.
double softmax_inplace(std::span<double> z) {
  const double zmax = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double& v : z) {
    v = std::exp(v - zmax);
    sum += v;
  }
  for (double& v : z) v /= sum;
  return zmax + std::log(sum);
}

// Scratch buffers for one forward/backward pass.
struct Activations {
  std::vector<double> hidden_pre;  // Mlp only
  std::vector<double> hidden;      // Mlp only
  std::vector<double> probs;
};

// Returns the per-sample cross-entropy; fills `act`.
double forward(const Model& model, std::span<const double> x, int label, Activations& act) {
  const auto& dims = model.dims();
  const double* w = model.params().data();
  act.probs.assign(dims.classes, 0.0);
  std::span<const double> feat = x;
  std::size_t in = dims.inputs;

  if (model.kind() == ModelKind::Mlp) {
    const double* w1 = w;
    const double* b1 = w1 + dims.hidden * dims.inputs;
    act.hidden_pre.assign(dims.hidden, 0.0);
    act.hidden.assign(dims.hidden, 0.0);
    for (std::size_t h = 0; h < dims.hidden; ++h) {
      double a = b1[h];
      const double* row = w1 + h * dims.inputs;
      for (std::size_t j = 0; j < dims.inputs; ++j) a += row[j] * x[j];
      act.hidden_pre[h] = a;
      act.hidden[h] = a > 0.0 ? a : 0.0;
    }
    w = b1 + dims.hidden;
    feat = act.hidden;
    in = dims.hidden;
  }

  const double* bias = w + dims.classes * in;
  for (std::size_t c = 0; c < dims.classes; ++c) {
    double z = bias[c];
    const double* row = w + c * in;
    for (std::size_t j = 0; j < in; ++j) z += row[j] * feat[j];
    act.probs[c] = z;
  }
  const double z_label = act.probs[static_cast<std::size_t>(label)];
  const double lse = softmax_inplace(act.probs);
  return lse - z_label;
}

}  // namespace

std::size_t param_count(ModelKind kind, const ModelDims& dims) {
  validate_dims(kind, dims);
  if (kind == ModelKind::LogisticRegression) return dims.classes * dims.inputs + dims.classes;
  return dims.hidden * dims.inputs + dims.hidden + dims.classes * dims.hidden + dims.classes;
}

Model::Model(ModelKind kind, ModelDims dims)
    : kind_(kind), dims_(dims), params_(param_count(kind, dims)) {}

Model::Model(ModelKind kind, ModelDims dims, ParamVector params)
    : kind_(kind), dims_(dims), params_(std::move(params)) {
  if (params_.size() != param_count(kind_, dims_)) {
    throw std::invalid_argument("Model: parameter vector has length " +
                                std::to_string(params_.size()) + ", layout needs " +
                                std::to_string(param_count(kind_, dims_)));
  }
}

void Model::predict_proba(std::span<const double> x, std::span<double> probs) const {
  Activations act;
  forward(*this, x, 0, act);
  std::copy(act.probs.begin(), act.probs.end(), probs.begin());
}

Model init_model(ModelKind kind, const ModelDims& dims, InitScheme scheme, std::uint64_t seed) {
  Model model(kind, dims);
  std::mt19937_64 rng(seed);
  double* w = model.params().data();

  auto fill_layer = [&](double* dst, std::size_t fan_out, std::size_t fan_in) {
    const std::size_t n = fan_out * fan_in;
    if (scheme == InitScheme::GlorotUniform) {
      const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
      std::uniform_real_distribution<double> dist(-limit, limit);
      for (std::size_t i = 0; i < n; ++i) dst[i] = dist(rng);
    } else {
      std::normal_distribution<double> dist(0.0, std::sqrt(2.0 / static_cast<double>(fan_in)));
      for (std::size_t i = 0; i < n; ++i) dst[i] = dist(rng);
    }
    return dst + n;
  };

  if (kind == ModelKind::LogisticRegression) {
    fill_layer(w, dims.classes, dims.inputs);
  } else {
    double* b1 = fill_layer(w, dims.hidden, dims.inputs);
    fill_layer(b1 + dims.hidden, dims.classes, dims.hidden);
  }
  return model;
}

LossAndGrad loss_and_grad(const Model& model, const Batch& batch, const Dataset& data) {
  batch.validate(data.size());
  const auto& dims = model.dims();
  LossAndGrad out;
  out.grad = ParamVector(model.params().size());
  double* g = out.grad.data();
  const double* w = model.params().data();
  const double inv_b = 1.0 / static_cast<double>(batch.size());

  Activations act;
  std::vector<double> dz(dims.classes);
  std::vector<double> dhidden;
  for (std::size_t idx : batch.indices) {
    const auto x = data.row(idx);
    const int y = data.label(idx);
    out.loss += forward(model, x, y, act);

    for (std::size_t c = 0; c < dims.classes; ++c) {
      dz[c] = (act.probs[c] - (static_cast<int>(c) == y ? 1.0 : 0.0)) * inv_b;
    }

    if (model.kind() == ModelKind::LogisticRegression) {
      double* gb = g + dims.classes * dims.inputs;
      for (std::size_t c = 0; c < dims.classes; ++c) {
        double* grow = g + c * dims.inputs;
        for (std::size_t j = 0; j < dims.inputs; ++j) grow[j] += dz[c] * x[j];
        gb[c] += dz[c];
      }
      continue;
    }

    const std::size_t off_b1 = dims.hidden * dims.inputs;
    const std::size_t off_w2 = off_b1 + dims.hidden;
    const std::size_t off_b2 = off_w2 + dims.classes * dims.hidden;
    dhidden.assign(dims.hidden, 0.0);
    for (std::size_t c = 0; c < dims.classes; ++c) {
      double* grow = g + off_w2 + c * dims.hidden;
      const double* wrow = w + off_w2 + c * dims.hidden;
      for (std::size_t h = 0; h < dims.hidden; ++h) {
        grow[h] += dz[c] * act.hidden[h];
        dhidden[h] += wrow[h] * dz[c];
      }
      g[off_b2 + c] += dz[c];
    }
    for (std::size_t h = 0; h < dims.hidden; ++h) {
      if (act.hidden_pre[h] <= 0.0) continue;
      double* grow = g + h * dims.inputs;
      for (std::size_t j = 0; j < dims.inputs; ++j) grow[j] += dhidden[h] * x[j];
      g[off_b1 + h] += dhidden[h];
    }
  }
  out.loss *= inv_b;
  return out;
}

double batch_loss(const Model& model, const Batch& batch, const Dataset& data) {
  batch.validate(data.size());
  Activations act;
  double loss = 0.0;
  for (std::size_t idx : batch.indices) loss += forward(model, data.row(idx), data.label(idx), act);
  return loss / static_cast<double>(batch.size());
}

Evaluation evaluate(const Model& model, const Dataset& data) {
  Activations act;
  Evaluation ev;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    ev.loss += forward(model, data.row(i), data.label(i), act);
    // max_element returns the first maximum, i.e. the lowest class index.
    const auto best = std::max_element(act.probs.begin(), act.probs.end()) - act.probs.begin();
    if (best == data.label(i)) ++correct;
  }
  const double n = static_cast<double>(data.size());
  ev.loss /= n;
  ev.accuracy = static_cast<double>(correct) / n;
  return ev;
}

std::string_view to_string(ModelKind kind) noexcept {
  return kind == ModelKind::LogisticRegression ? "logistic_regression" : "mlp";
}

std::string_view to_string(InitScheme scheme) noexcept {
  return scheme == InitScheme::GlorotUniform ? "glorot_uniform" : "he_normal";
}

}  // namespace fda::learner
