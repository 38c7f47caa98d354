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


#include "fda/sim/ledger.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "fda/core/variance.hpp"
#include "fda/errors.hpp"
#include "fda/sketch.hpp"
#include "test_util.hpp"

namespace fda::sim {
namespace {

TEST(LedgerTest, ModelAllReduceCost) {
  const std::vector<ParamVector> models(5, ParamVector(7850, 1.0));
  CostLedger ledger;
  const ParamVector mean = allreduce_average(models, ledger, Traffic::ModelSync, 1);
  EXPECT_EQ(mean, ParamVector(7850, 1.0));
  EXPECT_EQ(ledger.bytes_total(), 157000u);
  EXPECT_EQ(ledger.bytes_sync(), 157000u);
  EXPECT_EQ(ledger.bytes_state(), 0u);
  EXPECT_EQ(ledger.sync_events(), 1u);
}

TEST(LedgerTest, SketchStateAllReduceCost) {
  const auto t = SketchTransform::make(100, 5, 250, 1);
  testing::Gen g(71);
  std::vector<core::LocalState> states;
  for (int k = 0; k < 5; ++k) states.push_back(core::make_local_state_sketch(g.vector(100), t));
  CostLedger ledger;
  allreduce_states(states, ledger, 3);
  EXPECT_EQ(ledger.bytes_state(), 5u * (5000 + 4));
  EXPECT_EQ(ledger.sync_events(), 0u);
  ASSERT_EQ(ledger.events().size(), 1u);
  EXPECT_EQ(ledger.events()[0].step, 3u);
  EXPECT_EQ(ledger.events()[0].traffic, Traffic::State);
}

TEST(LedgerTest, LinearStateAllReduceCost) {
  const std::vector<core::LocalState> states(4, core::make_local_state_linear({1, 2}, core::Xi::absent()));
  CostLedger ledger;
  allreduce_states(states, ledger, 1);
  EXPECT_EQ(ledger.bytes_state(), 4u * 8);
}

TEST(LedgerTest, SingleWorkerIsIdentity) {
  const std::vector<ParamVector> one = {{1.5, -2}};
  CostLedger ledger;
  EXPECT_EQ(allreduce_average(one, ledger, Traffic::ModelSync, 1), one[0]);
  EXPECT_EQ(ledger.bytes_total(), 8u);
}

TEST(LedgerTest, ShapeMismatchThrows) {
  const std::vector<ParamVector> models = {ParamVector(3), ParamVector(4)};
  CostLedger ledger;
  EXPECT_THROW(allreduce_average(models, ledger, Traffic::ModelSync, 1), DimensionMismatch);
  EXPECT_EQ(ledger.bytes_total(), 0u);
}

TEST(LedgerTest, TotalsEqualSumOverEvents) {
  CostLedger ledger;
  ledger.charge(1, Traffic::State, 5, 8);
  ledger.charge(1, Traffic::ModelSync, 5, 252);
  ledger.charge(2, Traffic::State, 5, 8);
  ledger.add_steps(2);
  std::uint64_t sum = 0;
  for (const auto& e : ledger.events()) sum += e.bytes();
  EXPECT_EQ(sum, ledger.bytes_total());
  EXPECT_EQ(ledger.bytes_state(), 80u);
  EXPECT_EQ(ledger.bytes_sync(), 1260u);
  EXPECT_EQ(ledger.in_parallel_steps(), 2u);
  EXPECT_EQ(vector_payload_bytes(63), 252u);
}

}  // namespace
}  // namespace fda::sim
