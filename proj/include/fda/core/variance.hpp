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

// Model variance and its communication-efficient overestimators.
//
// With drifts u_k = w_k - w_sync, the variance of the worker models is
//   Var = mean_k ||u_k||^2 - ||mean_k u_k||^2.
// Workers exchange a LocalState (||u_k||^2 plus a small summary of u_k);
// the averaged state feeds an estimator H with H >= Var, either always
// (linear projection) or with high probability (AMS sketch).

#include <cstddef>
#include <optional>
#include <span>
#include <variant>

#include "fda/sketch.hpp"
#include "fda/vecmath.hpp"

namespace fda::core {

/// Direct evaluation of mean_k ||w_k - mean(w)||^2.
double variance_exact(std::span<const ParamVector> models);

/// mean_drift_norm_sq - ||mean_drift||^2.
double variance_from_drifts(double mean_drift_norm_sq, const ParamVector& mean_drift);

/// Unit direction for the scalar projection, or absent.
class Xi {
 public:
  static Xi absent() { return Xi(); }
  /// Normalizes `direction`; absent if its norm is below 1e-12.
  static Xi along(const ParamVector& direction);

  bool present() const noexcept { return direction_.has_value(); }
  const ParamVector& direction() const { return direction_.value(); }

 private:
  std::optional<ParamVector> direction_;
};

/// Xi along the difference of the last two synchronized models.
Xi compute_xi(const ParamVector& w_sync_now, const ParamVector& w_sync_prev);

enum class SummaryKind { Sketch, Linear };

struct LocalState {
  double drift_norm_sq = 0.0;
  std::variant<AmsSketch, double> summary;

  SummaryKind kind() const noexcept {
    return std::holds_alternative<AmsSketch>(summary) ? SummaryKind::Sketch : SummaryKind::Linear;
  }
  /// Bytes on the wire at 4 bytes per real: l*m*4 + 4 for a sketch state,
  /// 8 for a linear state.
  std::size_t payload_bytes() const noexcept;
};

/// Mean of K same-kind local states.
struct AveragedState {
  double mean_drift_norm_sq = 0.0;
  std::variant<AmsSketch, double> mean_summary;

  SummaryKind kind() const noexcept {
    return std::holds_alternative<AmsSketch>(mean_summary) ? SummaryKind::Sketch
                                                            : SummaryKind::Linear;
  }
};

LocalState make_local_state_sketch(const ParamVector& drift, const SketchTransform& transform);
/// Summary is <xi, drift>, or 0 when xi is absent.
LocalState make_local_state_linear(const ParamVector& drift, const Xi& xi);

/// Averages in list order. Throws KindMismatch on mixed kinds and
/// DimensionMismatch on mismatched sketches.
AveragedState average_states(std::span<const LocalState> states);

/// mean ||u||^2 - M2(mean sketch) / (1 + eps)
double h_sketch(const AveragedState& avg, double eps);
/// mean ||u||^2 - (mean <xi, u>)^2
double h_linear(const AveragedState& avg);

}  // namespace fda::core
