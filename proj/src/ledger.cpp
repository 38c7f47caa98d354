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

#include <stdexcept>

#include "fda/errors.hpp"

namespace fda::sim {

void CostLedger::charge(std::uint64_t step, Traffic traffic, std::size_t workers,
                        std::size_t payload_bytes) {
  const LedgerEvent ev{step, traffic, workers, payload_bytes};
  if (traffic == Traffic::State) {
    bytes_state_ += ev.bytes();
  } else {
    bytes_sync_ += ev.bytes();
    ++sync_events_;
  }
  events_.push_back(ev);
}

ParamVector allreduce_average(std::span<const ParamVector> payloads, CostLedger& ledger,
                              Traffic traffic, std::uint64_t step) {
  ParamVector mean = average(payloads);
  ledger.charge(step, traffic, payloads.size(), vector_payload_bytes(mean.size()));
  return mean;
}

core::AveragedState allreduce_states(std::span<const core::LocalState> states, CostLedger& ledger,
                                     std::uint64_t step) {
  core::AveragedState avg = core::average_states(states);
  ledger.charge(step, Traffic::State, states.size(), states.front().payload_bytes());
  return avg;
}

}  // namespace fda::sim
