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

#include <gtest/gtest.h>

#include <stdexcept>

namespace fda::cli {
namespace {

TEST(ThetaTest, PresetValues) {
  EXPECT_NEAR(theta_preset(ThetaProfile::FederatedLearning, 62000), 3.044, 5e-4);
  EXPECT_NEAR(theta_preset(ThetaProfile::Hpc, 62000), 1.699, 5e-4);
  EXPECT_DOUBLE_EQ(theta_preset(ThetaProfile::Balanced, 1), 3.89e-5);
}

TEST(ThetaTest, ProfilesAreOrdered) {
  EXPECT_GT(theta_coefficient(ThetaProfile::FederatedLearning),
            theta_coefficient(ThetaProfile::Balanced));
  EXPECT_GT(theta_coefficient(ThetaProfile::Balanced), theta_coefficient(ThetaProfile::Hpc));
}

TEST(ThetaTest, ParseProfile) {
  EXPECT_EQ(parse_theta_profile("fl"), ThetaProfile::FederatedLearning);
  EXPECT_EQ(parse_theta_profile("balanced"), ThetaProfile::Balanced);
  EXPECT_EQ(parse_theta_profile("hpc"), ThetaProfile::Hpc);
  EXPECT_THROW(parse_theta_profile("cloud"), std::invalid_argument);
}

TEST(ThetaTest, ZeroDimThrows) {
  EXPECT_THROW(theta_preset(ThetaProfile::Balanced, 0), std::invalid_argument);
}

}  // namespace
}  // namespace fda::cli
