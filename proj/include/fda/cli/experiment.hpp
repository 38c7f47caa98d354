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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fda/sim/simulator.hpp"

namespace fda::cli {

enum ExitCode : int {
  kTargetReached = 0,
  kTargetMissed = 1,
  kConfigInvalid = 2,
  kDiverged = 3,
};

struct RunOptions {
  /// Where default-named outputs go: <stem>.metrics.csv and <stem>.events.jsonl.
  std::filesystem::path out_dir = ".";
  bool audit_variance = false;
  /// Override the config's output paths.
  std::optional<std::filesystem::path> metrics_csv;
  std::optional<std::filesystem::path> events_jsonl;
};

struct ExperimentResult {
  int exit_code = kConfigInvalid;
  std::optional<sim::RunReport> report;
  std::optional<sim::RunConfig> config;
  std::string error;
  std::filesystem::path metrics_csv;
  std::filesystem::path events_jsonl;
};

/// Loads, runs and writes the metrics CSV and event log. Never throws for
/// config or run failures; they are reported through the exit code.
ExperimentResult run_experiment(const std::filesystem::path& config_path,
                                const RunOptions& options);

struct SweepOptions {
  std::filesystem::path out_dir;  // default: <config_dir>/results
  std::size_t jobs = 1;
  bool audit_variance = false;
};

struct SweepRow {
  std::string config;
  std::string strategy;
  std::optional<double> theta;
  std::size_t workers = 0;
  bool reached_target = false;
  std::uint64_t steps = 0;
  std::uint64_t bytes_total = 0;
  std::uint64_t bytes_state = 0;
  std::uint64_t bytes_sync = 0;
  std::uint64_t syncs = 0;
  std::string status;  // reached | missed | failed
  std::string error;
};

inline constexpr const char* kSweepCsvHeader =
    "config,strategy,theta,workers,reached_target,steps,bytes_total,bytes_state,bytes_sync,syncs,"
    "status";

/// Runs every *.json config in `config_dir`. Invalid or diverging configs
/// give a "failed" row and the sweep continues. Rows are sorted by
/// (strategy, theta, workers, config name).
std::vector<SweepRow> sweep(const std::filesystem::path& config_dir, const SweepOptions& options);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace fda::cli
