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

#include "fda/core/variance.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fda/errors.hpp"

namespace fda::core {

double variance_exact(std::span<const ParamVector> models) {
  const ParamVector mean = average(models);
  double acc = 0.0;
  for (const auto& w : models) {
    double dist = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double diff = w[i] - mean[i];
      dist += diff * diff;
    }
    acc += dist;
  }
  return acc / static_cast<double>(models.size());
}

double variance_from_drifts(double mean_drift_norm_sq, const ParamVector& mean_drift) {
  return mean_drift_norm_sq - norm_sq(mean_drift);
}

Xi Xi::along(const ParamVector& direction) {
  const double norm = std::sqrt(norm_sq(direction));
  Xi xi;
  if (!(norm >= 1e-12)) return xi;
  xi.direction_ = scale(1.0 / norm, direction);
  return xi;
}

Xi compute_xi(const ParamVector& w_sync_now, const ParamVector& w_sync_prev) {
  return Xi::along(sub(w_sync_now, w_sync_prev));
}

std::size_t LocalState::payload_bytes() const noexcept {
  if (const auto* sk = std::get_if<AmsSketch>(&summary)) return sk->rows() * sk->cols() * 4 + 4;
  return 8;
}

LocalState make_local_state_sketch(const ParamVector& drift, const SketchTransform& transform) {
  return LocalState{norm_sq(drift), transform.apply(drift)};
}

LocalState make_local_state_linear(const ParamVector& drift, const Xi& xi) {
  LocalState s{norm_sq(drift), 0.0};
  if (xi.present()) s.summary = dot(xi.direction(), drift);
  return s;
}

AveragedState average_states(std::span<const LocalState> states) {
  if (states.empty()) throw std::invalid_argument("average_states: empty list");
  const SummaryKind kind = states.front().kind();
  double norm_acc = 0.0;
  for (const auto& s : states) {
    if (s.kind() != kind) throw KindMismatch("average_states: mixed summary kinds");
    norm_acc += s.drift_norm_sq;
  }
  const double inv = 1.0 / static_cast<double>(states.size());
  AveragedState avg;
  avg.mean_drift_norm_sq = norm_acc * inv;
  if (kind == SummaryKind::Linear) {
    double acc = 0.0;
    for (const auto& s : states) acc += std::get<double>(s.summary);
    avg.mean_summary = acc * inv;
  } else {
    std::vector<AmsSketch> sketches;
    sketches.reserve(states.size());
    for (const auto& s : states) sketches.push_back(std::get<AmsSketch>(s.summary));
    avg.mean_summary = sketch_average(sketches);
  }
  return avg;
}

double h_sketch(const AveragedState& avg, double eps) {
  const auto* sk = std::get_if<AmsSketch>(&avg.mean_summary);
  if (sk == nullptr) throw KindMismatch("h_sketch: averaged state holds a linear summary");
  if (!(eps > 0.0)) throw std::invalid_argument("h_sketch: eps must be > 0");
  return avg.mean_drift_norm_sq - m2_estimate(*sk) / (1.0 + eps);
}

double h_linear(const AveragedState& avg) {
  const auto* proj = std::get_if<double>(&avg.mean_summary);
  if (proj == nullptr) throw KindMismatch("h_linear: averaged state holds a sketch");
  return avg.mean_drift_norm_sq - (*proj) * (*proj);
}

}  // namespace fda::core
