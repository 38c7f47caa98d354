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
#include <string_view>

namespace fda::cli {

enum class ThetaProfile { FederatedLearning, Balanced, Hpc };

/// Per-parameter coefficient c of the rule of thumb theta = c * d.
double theta_coefficient(ThetaProfile profile) noexcept;

/// c * d with c = 4.91e-5 (fl), 3.89e-5 (balanced), 2.74e-5 (hpc).
double theta_preset(ThetaProfile profile, std::size_t dim);

/// Accepts "fl", "balanced" or "hpc"; throws std::invalid_argument otherwise.
ThetaProfile parse_theta_profile(std::string_view name);

}  // namespace fda::cli
