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

#include <iosfwd>
#include <string>

#include "fda/sim/simulator.hpp"

namespace fda::sim {

/// Header of the per-epoch metrics CSV; the column set is fixed.
inline constexpr const char* kMetricsCsvHeader =
    "epoch,test_accuracy,train_loss,bytes_total,bytes_state,bytes_sync,steps,syncs";

/// One row per evaluated epoch.
void write_metrics_csv(const RunReport& report, std::ostream& out);

/// One {"type":"step"} record per step and an extra {"type":"sync"} record
/// per model synchronization. Both carry step, worker_count, H, synced and
/// bytes_cumulative; H is null for strategies that do not monitor variance.
void write_events_jsonl(const RunReport& report, std::ostream& out);

}  // namespace fda::sim
