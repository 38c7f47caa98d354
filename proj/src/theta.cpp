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

#include "fda/cli/theta.hpp"

#include <stdexcept>
#include <string>

namespace fda::cli {

double theta_coefficient(ThetaProfile profile) noexcept {
  switch (profile) {
    case ThetaProfile::FederatedLearning:
      return 4.91e-5;
    case ThetaProfile::Balanced:
      return 3.89e-5;
    case ThetaProfile::Hpc:
      return 2.74e-5;
  }
  return 0.0;
}

double theta_preset(ThetaProfile profile, std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("theta_preset: dim must be >= 1");
  return theta_coefficient(profile) * static_cast<double>(dim);
}

ThetaProfile parse_theta_profile(std::string_view name) {
  if (name == "fl") return ThetaProfile::FederatedLearning;
  if (name == "balanced") return ThetaProfile::Balanced;
  if (name == "hpc") return ThetaProfile::Hpc;
  throw std::invalid_argument("unknown theta profile '" + std::string(name) +
                              "' (expected fl, balanced or hpc)");
}

}  // namespace fda::cli
