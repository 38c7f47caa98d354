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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "fda/learner/dataset.hpp"
#include "test_util.hpp"

namespace fda::learner {
namespace {

using testing::Gen;

Dataset random_dataset(Gen& g, std::size_t n, std::size_t p, std::size_t c) {
  std::vector<double> x(n * p);
  for (auto& v : x) v = g.normal();
  std::vector<int> y(n);
  for (auto& l : y) l = static_cast<int>(g.index(0, c - 1));
  return Dataset(p, c, std::move(x), std::move(y));
}

Batch full_batch(std::size_t n) {
  Batch b;
  b.indices.resize(n);
  std::iota(b.indices.begin(), b.indices.end(), std::size_t{0});
  return b;
}

// Central differences, relative error with a small floor for near-zero entries.
double max_gradient_error(Model& m, const Batch& batch, const Dataset& data) {
  const ParamVector grad = loss_and_grad(m, batch, data).grad;
  double worst = 0.0;
  const double h = 1e-5;
  for (std::size_t i = 0; i < m.params().size(); ++i) {
    const double saved = m.params()[i];
    m.params()[i] = saved + h;
    const double up = batch_loss(m, batch, data);
    m.params()[i] = saved - h;
    const double down = batch_loss(m, batch, data);
    m.params()[i] = saved;
    const double fd = (up - down) / (2 * h);
    const double denom = std::max({std::abs(fd), std::abs(grad[i]), 1e-6});
    worst = std::max(worst, std::abs(fd - grad[i]) / denom);
  }
  return worst;
}

TEST(ModelTest, ParameterCounts) {
  EXPECT_EQ(param_count(ModelKind::LogisticRegression, {784, 10, 0}), 7850u);
  EXPECT_EQ(param_count(ModelKind::Mlp, {784, 10, 32}), 784u * 32 + 32 + 32 * 10 + 10);
  EXPECT_EQ(param_count(ModelKind::LogisticRegression, {20, 3, 0}), 63u);
}

TEST(ModelTest, InvalidDimsThrow) {
  EXPECT_THROW(Model(ModelKind::LogisticRegression, {0, 3, 0}), std::invalid_argument);
  EXPECT_THROW(Model(ModelKind::LogisticRegression, {4, 1, 0}), std::invalid_argument);
  EXPECT_THROW(Model(ModelKind::Mlp, {4, 3, 0}), std::invalid_argument);
  EXPECT_THROW(Model(ModelKind::LogisticRegression, {4, 3, 0}, ParamVector(5)),
               std::invalid_argument);
}

TEST(ModelTest, UniformLogitsGiveLogC) {
  Gen g(31);
  const Dataset data = random_dataset(g, 20, 5, 10);
  const Model m(ModelKind::LogisticRegression, {5, 10, 0});
  EXPECT_NEAR(loss_and_grad(m, full_batch(20), data).loss, std::log(10.0), 1e-6);
  EXPECT_NEAR(loss_and_grad(m, full_batch(20), data).loss, 2.302585, 1e-6);
}

TEST(ModelTest, InitIsDeterministicAndBounded) {
  const ModelDims dims{30, 4, 16};
  const Model a = init_model(ModelKind::Mlp, dims, InitScheme::GlorotUniform, 5);
  const Model b = init_model(ModelKind::Mlp, dims, InitScheme::GlorotUniform, 5);
  EXPECT_EQ(a.params(), b.params());
  const double bound1 = std::sqrt(6.0 / (30 + 16));
  const double bound2 = std::sqrt(6.0 / (16 + 4));
  const auto& w = a.params();
  for (std::size_t i = 0; i < 16 * 30; ++i) EXPECT_LE(std::abs(w[i]), bound1);
  for (std::size_t i = 16 * 30; i < 16 * 30 + 16; ++i) EXPECT_EQ(w[i], 0.0);
  for (std::size_t i = 16 * 31; i < 16 * 31 + 64; ++i) EXPECT_LE(std::abs(w[i]), bound2);
}

TEST(ModelTest, HeNormalHasExpectedSpread) {
  const ModelDims dims{400, 3, 0};
  const Model m = init_model(ModelKind::LogisticRegression, dims, InitScheme::HeNormal, 2);
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < 1200; ++i) sum_sq += m.params()[i] * m.params()[i];
  EXPECT_NEAR(std::sqrt(sum_sq / 1200), std::sqrt(2.0 / 400), 0.1 * std::sqrt(2.0 / 400));
}

TEST(ModelTest, SoftmaxRowsSumToOne) {
  Gen g(32);
  for (auto kind : {ModelKind::LogisticRegression, ModelKind::Mlp}) {
    const Model m = init_model(kind, {6, 5, 8}, InitScheme::HeNormal, 3);
    std::vector<double> probs(5);
    for (int t = 0; t < 50; ++t) {
      std::vector<double> x(6);
      for (auto& v : x) v = g.normal(5.0);
      m.predict_proba(x, probs);
      double s = 0.0;
      for (double p : probs) {
        EXPECT_GE(p, 0.0);
        s += p;
      }
      EXPECT_NEAR(s, 1.0, 1e-9);
    }
  }
}

TEST(ModelTest, GradientsMatchFiniteDifferences) {
  Gen g(33);
  const Dataset data = random_dataset(g, 10, 4, 3);
  for (auto kind : {ModelKind::LogisticRegression, ModelKind::Mlp}) {
    for (int point = 0; point < 30; ++point) {
      Model m(kind, {4, 3, 5});
      for (auto& w : m.params()) w = g.normal();
      EXPECT_LT(max_gradient_error(m, full_batch(10), data), 1e-4) << to_string(kind);
    }
  }
}

TEST(ModelTest, DuplicatedBatchLeavesLossAndGradUnchanged) {
  Gen g(34);
  const Dataset data = random_dataset(g, 12, 3, 4);
  for (auto kind : {ModelKind::LogisticRegression, ModelKind::Mlp}) {
    const Model m = init_model(kind, {3, 4, 6}, InitScheme::GlorotUniform, 1);
    const Batch once{{0, 3, 5, 7}};
    const Batch twice{{0, 3, 5, 7, 0, 3, 5, 7}};
    const auto a = loss_and_grad(m, once, data);
    const auto b = loss_and_grad(m, twice, data);
    EXPECT_NEAR(a.loss, b.loss, 1e-12);
    EXPECT_LT(testing::max_abs_diff(a.grad, b.grad), 1e-12);
  }
}

TEST(ModelTest, LossIsNonNegative) {
  Gen g(35);
  const Dataset data = random_dataset(g, 30, 3, 3);
  for (int t = 0; t < 20; ++t) {
    Model m(ModelKind::Mlp, {3, 3, 4});
    for (auto& w : m.params()) w = g.normal(3.0);
    EXPECT_GE(batch_loss(m, full_batch(30), data), 0.0);
  }
}

TEST(ModelTest, PerfectClassifierScoresOne) {
  // Labels follow the sign of the single feature.
  const Dataset data(1, 2, {-2, -1, 1, 3}, {0, 0, 1, 1});
  Model m(ModelKind::LogisticRegression, {1, 2, 0}, ParamVector{-5, 5, 0, 0});
  const auto ev = evaluate(m, data);
  EXPECT_DOUBLE_EQ(ev.accuracy, 1.0);
  EXPECT_LT(ev.loss, 0.01);
}

TEST(ModelTest, TiesGoToLowestClass) {
  const Dataset data(1, 3, {1, 1}, {0, 1});
  const Model m(ModelKind::LogisticRegression, {1, 3, 0});
  EXPECT_DOUBLE_EQ(evaluate(m, data).accuracy, 0.5);
}

TEST(ModelTest, SingleSampleAccuracyIsZeroOrOne) {
  Gen g(36);
  const Dataset data = random_dataset(g, 1, 3, 3);
  const Model m = init_model(ModelKind::LogisticRegression, {3, 3, 0}, InitScheme::HeNormal, 4);
  const double acc = evaluate(m, data).accuracy;
  EXPECT_TRUE(acc == 0.0 || acc == 1.0);
}

TEST(ModelTest, RandomModelOnRandomLabelsIsAtChance) {
  Gen g(37);
  const Dataset data = random_dataset(g, 10000, 5, 2);
  const Model m = init_model(ModelKind::LogisticRegression, {5, 2, 0}, InitScheme::HeNormal, 8);
  EXPECT_NEAR(evaluate(m, data).accuracy, 0.5, 0.03);
}

}  // namespace
}  // namespace fda::learner
