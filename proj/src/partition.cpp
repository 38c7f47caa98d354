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

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "fda/detail/overloaded.hpp"

namespace fda::sim {
namespace {

using detail::Overloaded;

// Shard k may hold n/K samples, plus one for the first n%K shards.
std::vector<std::size_t> shard_capacities(std::size_t n, std::size_t workers) {
  std::vector<std::size_t> cap(workers, n / workers);
  for (std::size_t k = 0; k < n % workers; ++k) ++cap[k];
  return cap;
}

// Round-robin over shards that still have room.
void deal_round_robin(const std::vector<std::size_t>& items, const std::vector<std::size_t>& cap,
                      std::vector<std::vector<std::size_t>>& shards) {
  std::size_t k = 0;
  const std::size_t workers = shards.size();
  for (std::size_t item : items) {
    std::size_t tries = 0;
    while (shards[k].size() >= cap[k]) {
      k = (k + 1) % workers;
      if (++tries > workers) throw std::logic_error("partition: capacity exhausted");
    }
    shards[k].push_back(item);
    k = (k + 1) % workers;
  }
}

}  // namespace

std::string to_string(const PartitionScheme& scheme) {
  return std::visit(Overloaded{
                        [](const Iid&) -> std::string { return "iid"; },
                        [](const NonIidFraction& s) -> std::string {
                          char buf[48];
                          std::snprintf(buf, sizeof buf, "noniid_fraction(%g%%)", s.percent);
                          return buf;
                        },
                        [](const NonIidLabel& s) -> std::string {
                          return "noniid_label(" + std::to_string(s.label) + "," +
                                 std::to_string(s.holders) + ")";
                        },
                    },
                    scheme);
}

std::size_t Partition::largest_shard() const noexcept {
  std::size_t best = 0;
  for (const auto& s : shards) best = std::max(best, s.size());
  return best;
}

Partition partition(const learner::Dataset& data, std::size_t workers,
                    const PartitionScheme& scheme, std::uint64_t seed) {
  const std::size_t n = data.size();
  if (workers == 0) throw std::invalid_argument("partition: K must be >= 1");
  if (workers > n) {
    throw std::invalid_argument("partition: K = " + std::to_string(workers) +
                                " exceeds dataset size " + std::to_string(n));
  }

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);

  const auto cap = shard_capacities(n, workers);
  Partition out;
  out.scheme = scheme;
  out.shards.assign(workers, {});

  std::vector<std::size_t> rest;
  std::visit(
      Overloaded{
          [&](const Iid&) { rest = order; },
          [&](const NonIidFraction& s) {
            if (!(s.percent >= 0.0 && s.percent <= 100.0)) {
              throw std::invalid_argument("partition: percent must lie in [0, 100]");
            }
            const auto skewed = static_cast<std::size_t>(
                std::floor(s.percent / 100.0 * static_cast<double>(n) + 1e-9));
            std::vector<std::size_t> sorted(order.begin(), order.begin() + skewed);
            std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
              return data.label(a) != data.label(b) ? data.label(a) < data.label(b) : a < b;
            });
            std::size_t pos = 0;
            for (std::size_t k = 0; k < workers; ++k) {
              const std::size_t chunk = skewed / workers + (k < skewed % workers ? 1 : 0);
              out.shards[k].assign(sorted.begin() + pos, sorted.begin() + pos + chunk);
              pos += chunk;
            }
            rest.assign(order.begin() + skewed, order.end());
          },
          [&](const NonIidLabel& s) {
            if (s.holders < 1 || s.holders > workers) {
              throw std::invalid_argument("partition: holders must lie in [1, K]");
            }
            std::vector<std::size_t> labelled;
            for (std::size_t i : order) {
              (data.label(i) == s.label ? labelled : rest).push_back(i);
            }
            if (labelled.empty()) {
              throw std::invalid_argument("partition: label " + std::to_string(s.label) +
                                          " does not occur in the dataset");
            }
            // Holders take every sample of the label even past their balanced share;
            // the remainder then tops the other shards up.
            for (std::size_t j = 0; j < labelled.size(); ++j) {
              out.shards[j % s.holders].push_back(labelled[j]);
            }
          },
      },
      scheme);

  deal_round_robin(rest, cap, out.shards);
  for (std::size_t k = 0; k < workers; ++k) {
    if (out.shards[k].empty()) {
      throw std::invalid_argument("partition: worker " + std::to_string(k) +
                                  " received no samples");
    }
  }
  return out;
}

}  // namespace fda::sim
