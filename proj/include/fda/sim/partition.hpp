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
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fda/learner/dataset.hpp"

namespace fda::sim {

struct Iid {
  bool operator==(const Iid&) const = default;
};

/// `percent` of the samples are sorted by label and dealt to workers in
/// contiguous chunks; the rest are spread IID.
struct NonIidFraction {
  double percent = 0.0;

  bool operator==(const NonIidFraction&) const = default;
};

/// Every sample of `label` goes to workers [0, holders), even when that
/// overfills them; the rest are spread IID over the remaining room.
struct NonIidLabel {
  int label = 0;
  std::size_t holders = 1;

  bool operator==(const NonIidLabel&) const = default;
};

using PartitionScheme = std::variant<Iid, NonIidFraction, NonIidLabel>;

std::string to_string(const PartitionScheme& scheme);

/// K disjoint, non-empty shards covering the dataset. Sizes are within one of
/// each other except for label holders.
struct Partition {
  std::vector<std::vector<std::size_t>> shards;
  PartitionScheme scheme;

  std::size_t workers() const noexcept { return shards.size(); }
  std::size_t largest_shard() const noexcept;
};

/// Deterministic in `seed`. Throws std::invalid_argument when K is 0 or
/// exceeds n, when percent is outside [0, 100], when the label does not
/// occur, or when a worker would be left without samples.
Partition partition(const learner::Dataset& data, std::size_t workers,
                    const PartitionScheme& scheme, std::uint64_t seed);

}  // namespace fda::sim
