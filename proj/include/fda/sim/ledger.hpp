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

// Byte and step accounting for the simulated network. Every AllReduce
// charges each of the K workers once for its payload.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fda/core/variance.hpp"
#include "fda/vecmath.hpp"

namespace fda::sim {

enum class Traffic { State, ModelSync };

struct LedgerEvent {
  std::uint64_t step = 0;
  Traffic traffic = Traffic::State;
  std::size_t workers = 0;
  std::size_t payload_bytes = 0;

  std::uint64_t bytes() const noexcept { return std::uint64_t{workers} * payload_bytes; }
  bool operator==(const LedgerEvent&) const = default;
};

class CostLedger {
 public:
  void charge(std::uint64_t step, Traffic traffic, std::size_t workers, std::size_t payload_bytes);
  void add_steps(std::uint64_t n = 1) noexcept { in_parallel_steps_ += n; }

  std::uint64_t bytes_total() const noexcept { return bytes_state_ + bytes_sync_; }
  std::uint64_t bytes_state() const noexcept { return bytes_state_; }
  std::uint64_t bytes_sync() const noexcept { return bytes_sync_; }
  std::uint64_t in_parallel_steps() const noexcept { return in_parallel_steps_; }
  std::uint64_t sync_events() const noexcept { return sync_events_; }
  const std::vector<LedgerEvent>& events() const noexcept { return events_; }

  bool operator==(const CostLedger&) const = default;

 private:
  std::uint64_t bytes_state_ = 0;
  std::uint64_t bytes_sync_ = 0;
  std::uint64_t in_parallel_steps_ = 0;
  std::uint64_t sync_events_ = 0;
  std::vector<LedgerEvent> events_;
};

/// Bytes for a dense vector of `dim` reals at 4 bytes each.
inline constexpr std::size_t vector_payload_bytes(std::size_t dim) noexcept { return dim * 4; }

/// Elementwise mean in ascending worker order; charges K * dim * 4 bytes.
ParamVector allreduce_average(std::span<const ParamVector> payloads, CostLedger& ledger,
                              Traffic traffic, std::uint64_t step);

/// Mean local state; charges K * state payload bytes as state traffic.
core::AveragedState allreduce_states(std::span<const core::LocalState> states, CostLedger& ledger,
                                     std::uint64_t step);

}  // namespace fda::sim
