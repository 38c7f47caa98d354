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


#include "fda/core/strategy.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "test_util.hpp"

namespace fda::core {
namespace {

SyncContext with_h(double h) {
  SyncContext ctx;
  ctx.h = h;
  return ctx;
}

TEST(StrategyTest, Names) {
  EXPECT_EQ(strategy_name(SketchFda{}), "SketchFDA");
  EXPECT_EQ(strategy_name(LinearFda{}), "LinearFDA");
  EXPECT_EQ(strategy_name(Synchronous{}), "Synchronous");
  EXPECT_EQ(strategy_name(LocalSgd{}), "LocalSGD");
  EXPECT_EQ(strategy_name(FedOpt{ServerMomentum{}, 1}), "FedAvgM");
  EXPECT_EQ(strategy_name(FedOpt{ServerAdam{}, 1}), "FedAdam");
}

TEST(StrategyTest, Validation) {
  EXPECT_THROW(validate(LinearFda{-1.0}), std::invalid_argument);
  EXPECT_THROW(validate(LocalSgd{0}), std::invalid_argument);
  EXPECT_THROW(validate(FedOpt{ServerMomentum{}, 0}), std::invalid_argument);
  EXPECT_THROW(validate(SketchFda{1.0, 0, 250, {}}), std::invalid_argument);
  EXPECT_NO_THROW(validate(LinearFda{std::numeric_limits<double>::infinity()}));
  EXPECT_NO_THROW(validate(SketchFda{}));
}

TEST(StrategyTest, FdaComparesStrictly) {
  EXPECT_TRUE(should_sync(LinearFda{0.6}, with_h(0.75)));
  EXPECT_FALSE(should_sync(LinearFda{0.75}, with_h(0.75)));
  EXPECT_FALSE(should_sync(SketchFda{1.0}, with_h(0.5)));
  EXPECT_TRUE(should_sync(SketchFda{1.0}, with_h(1.5)));
}

TEST(StrategyTest, ZeroThetaAlwaysSyncs) {
  EXPECT_TRUE(should_sync(LinearFda{0.0}, with_h(0.0)));
  EXPECT_TRUE(should_sync(SketchFda{0.0}, SyncContext{}));
  EXPECT_FALSE(exchanges_state(LinearFda{0.0}));
  EXPECT_TRUE(exchanges_state(LinearFda{0.1}));
  EXPECT_FALSE(exchanges_state(Synchronous{}));
}

TEST(StrategyTest, SynchronousAlwaysSyncs) {
  EXPECT_TRUE(should_sync(Synchronous{}, SyncContext{}));
}

TEST(StrategyTest, LocalSgdEveryTau) {
  const LocalSgd s{4};
  std::size_t since = 0;
  std::vector<int> synced_at;
  for (int step = 1; step <= 12; ++step) {
    SyncContext ctx;
    ctx.steps_since_sync = ++since;
    if (should_sync(s, ctx)) {
      synced_at.push_back(step);
      since = 0;
    }
  }
  EXPECT_EQ(synced_at, (std::vector<int>{4, 8, 12}));
}

TEST(StrategyTest, FedOptAtEndOfLocalEpochs) {
  const FedOpt s{ServerMomentum{}, 2};
  SyncContext ctx;
  ctx.epoch_end = true;
  ctx.epochs_since_sync = 1;
  EXPECT_FALSE(should_sync(s, ctx));
  ctx.epochs_since_sync = 2;
  EXPECT_TRUE(should_sync(s, ctx));
  ctx.epoch_end = false;
  EXPECT_FALSE(should_sync(s, ctx));
}

TEST(StrategyTest, ThetaAccessor) {
  EXPECT_EQ(strategy_theta(LinearFda{2.5}), 2.5);
  EXPECT_FALSE(strategy_theta(Synchronous{}).has_value());
}

TEST(FedOptTest, ZeroDeltaKeepsGlobal) {
  ServerOptimizer server(FedOpt{ServerMomentum{}, 1}, 3);
  const ParamVector g{1, 2, 3};
  EXPECT_EQ(fedopt_server_update(g, ParamVector(3), server), g);
}

TEST(FedOptTest, PlainServerReducesToFedAvg) {
  ServerOptimizer server(FedOpt{ServerMomentum{0.0, 1.0}, 1}, 2);
  const ParamVector g{1, 2};
  const ParamVector delta{0.25, -0.5};
  EXPECT_EQ(fedopt_server_update(g, delta, server), add(g, delta));
}

TEST(FedOptTest, FedAvgMTwoRoundsMatchRecurrence) {
  ServerOptimizer server(FedOpt{ServerMomentum{}, 1}, 1);
  ParamVector g{1.0};
  g = fedopt_server_update(g, {0.2}, server);
  // v = 0.9 * 0 - 0.316 * (-0.2)
  const double v1 = 0.316 * 0.2;
  EXPECT_NEAR(g[0], 1.0 + v1, 1e-12);
  g = fedopt_server_update(g, {-0.1}, server);
  const double v2 = 0.9 * v1 - 0.316 * 0.1;
  EXPECT_NEAR(g[0], 1.0 + v1 + v2, 1e-12);
}

TEST(FedOptTest, FedAdamFirstRoundMovesAlongDelta) {
  ServerOptimizer server(FedOpt{ServerAdam{}, 1}, 2);
  const ParamVector out = fedopt_server_update({0, 0}, {0.3, -2.0}, server);
  EXPECT_NEAR(out[0], 1e-3 * 0.3 / (0.3 + 1e-7), 1e-12);
  EXPECT_NEAR(out[1], -1e-3 * 2.0 / (2.0 + 1e-7), 1e-12);
}

}  // namespace
}  // namespace fda::core
