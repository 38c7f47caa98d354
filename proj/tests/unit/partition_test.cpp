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


#include "fda/sim/partition.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "fda/learner/dataset.hpp"
#include "test_util.hpp"

namespace fda::sim {
namespace {

using learner::Dataset;
using learner::make_blobs;
using testing::Gen;

void expect_disjoint_cover(const Partition& p, std::size_t n) {
  std::vector<int> seen(n, 0);
  for (const auto& shard : p.shards) {
    EXPECT_FALSE(shard.empty());
    for (std::size_t i : shard) {
      ASSERT_LT(i, n);
      ++seen[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(seen[i], 1) << "sample " << i;
}

std::size_t size_spread(const Partition& p) {
  std::size_t lo = p.shards[0].size(), hi = lo;
  for (const auto& s : p.shards) {
    lo = std::min(lo, s.size());
    hi = std::max(hi, s.size());
  }
  return hi - lo;
}

TEST(PartitionTest, SingleWorkerGetsEverything) {
  const Dataset d = make_blobs(50, 2, 3, 1);
  const Partition p = partition(d, 1, Iid{}, 4);
  ASSERT_EQ(p.workers(), 1u);
  EXPECT_EQ(p.shards[0].size(), 50u);
  expect_disjoint_cover(p, 50);
}

TEST(PartitionTest, FullySortedTwoClassDealIsLabelPure) {
  const Dataset d = make_blobs(200, 2, 2, 3);
  const Partition p = partition(d, 2, NonIidFraction{100.0}, 9);
  for (std::size_t k = 0; k < 2; ++k) {
    std::set<int> labels;
    for (std::size_t i : p.shards[k]) labels.insert(d.label(i));
    EXPECT_EQ(labels, (std::set<int>{static_cast<int>(k)}));
  }
}

TEST(PartitionTest, LabelHolderTakesAllOfItsLabel) {
  const Dataset d = make_blobs(600, 2, 3, 3);
  const Partition p = partition(d, 5, NonIidLabel{0, 1}, 2);
  expect_disjoint_cover(p, 600);
  std::size_t on_holder = 0;
  for (std::size_t i : p.shards[0]) on_holder += d.label(i) == 0;
  EXPECT_EQ(on_holder, 200u);
  for (std::size_t k = 1; k < 5; ++k) {
    for (std::size_t i : p.shards[k]) EXPECT_NE(d.label(i), 0);
  }
}

TEST(PartitionTest, LabelThatFitsKeepsBalancedShards) {
  const Dataset d = make_blobs(6000, 2, 3, 3);
  const Partition p = partition(d, 5, NonIidLabel{0, 2}, 2);
  expect_disjoint_cover(p, 6000);
  EXPECT_LE(size_spread(p), 1u);
  std::size_t held = 0;
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t i : p.shards[k]) held += d.label(i) == 0;
  }
  EXPECT_EQ(held, 2000u);
}

TEST(PartitionTest, Errors) {
  const Dataset d = make_blobs(10, 2, 2, 1);
  EXPECT_THROW(partition(d, 0, Iid{}, 1), std::invalid_argument);
  EXPECT_THROW(partition(d, 11, Iid{}, 1), std::invalid_argument);
  EXPECT_THROW(partition(d, 2, NonIidFraction{101.0}, 1), std::invalid_argument);
  EXPECT_THROW(partition(d, 2, NonIidFraction{-1.0}, 1), std::invalid_argument);
  EXPECT_THROW(partition(d, 2, NonIidLabel{5, 1}, 1), std::invalid_argument);
  EXPECT_THROW(partition(d, 2, NonIidLabel{0, 0}, 1), std::invalid_argument);
  EXPECT_THROW(partition(d, 2, NonIidLabel{0, 3}, 1), std::invalid_argument);
}

TEST(PartitionTest, NoWorkerLeftEmpty) {
  // Label 0 is everything but one sample; with one holder the other two
  // workers cannot all receive data.
  const Dataset d(1, 2, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1});
  EXPECT_THROW(partition(d, 3, NonIidLabel{0, 1}, 1), std::invalid_argument);
}

TEST(PartitionTest, SchemeNames) {
  EXPECT_EQ(to_string(Iid{}), "iid");
  EXPECT_EQ(to_string(NonIidFraction{60}), "noniid_fraction(60%)");
  EXPECT_EQ(to_string(NonIidLabel{0, 2}), "noniid_label(0,2)");
}

TEST(PartitionProperty, DisjointCoveringAndBalanced) {
  Gen g(61);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = g.index(20, 400), c = g.index(2, 5);
    const Dataset d = make_blobs(n, 1, c, t);
    const std::size_t k = g.index(1, 10);
    const int pick = static_cast<int>(g.index(0, 1));
    PartitionScheme scheme = Iid{};
    if (pick == 1) scheme = NonIidFraction{g.uniform(0, 100)};
    const Partition p = partition(d, k, scheme, g.engine()());
    ASSERT_EQ(p.workers(), k);
    expect_disjoint_cover(p, n);
    EXPECT_LE(size_spread(p), 1u) << to_string(scheme);
  }
}

TEST(PartitionProperty, LabelSchemeCovers) {
  Gen g(62);
  for (int t = 0; t < 100; ++t) {
    const std::size_t c = g.index(2, 5), n = g.index(10 * c, 400);
    const Dataset d = make_blobs(n, 1, c, t);
    const std::size_t k = g.index(1, 8);
    const std::size_t holders = g.index(1, k);
    const int label = static_cast<int>(g.index(0, c - 1));
    const Partition p = partition(d, k, NonIidLabel{label, holders}, t);
    expect_disjoint_cover(p, n);
    for (std::size_t w = holders; w < k; ++w) {
      for (std::size_t i : p.shards[w]) EXPECT_NE(d.label(i), label);
    }
  }
}

TEST(PartitionProperty, DeterministicPerSeed) {
  const Dataset d = make_blobs(300, 2, 3, 1);
  for (const PartitionScheme& s :
       {PartitionScheme{Iid{}}, PartitionScheme{NonIidFraction{60}}, PartitionScheme{NonIidLabel{1, 2}}}) {
    EXPECT_EQ(partition(d, 4, s, 77).shards, partition(d, 4, s, 77).shards);
  }
  EXPECT_NE(partition(d, 4, Iid{}, 77).shards, partition(d, 4, Iid{}, 78).shards);
}

}  // namespace
}  // namespace fda::sim
