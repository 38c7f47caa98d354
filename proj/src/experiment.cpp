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

#include "fda/cli/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <thread>
#include <tuple>

#include "fda/cli/config.hpp"
#include "fda/errors.hpp"
#include "fda/sim/report_io.hpp"

namespace fda::cli {
namespace {

namespace fs = std::filesystem;

fs::path choose(const std::optional<fs::path>& override_path, const std::string& from_config,
                const fs::path& fallback) {
  if (override_path) return *override_path;
  if (!from_config.empty()) return from_config;
  return fallback;
}

void write_file(const fs::path& path, const auto& writer) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  writer(out);
}

}  // namespace

ExperimentResult run_experiment(const fs::path& config_path, const RunOptions& options) {
  ExperimentResult result;
  sim::RunConfig config;
  try {
    config = load_config_file(config_path);
  } catch (const std::exception& e) {
    result.exit_code = kConfigInvalid;
    result.error = e.what();
    return result;
  }
  if (options.audit_variance) config.audit_variance = true;
  result.config = config;

  const std::string stem = config_path.stem().string();
  result.metrics_csv =
      choose(options.metrics_csv, config.output.metrics_csv, options.out_dir / (stem + ".metrics.csv"));
  result.events_jsonl = choose(options.events_jsonl, config.output.events_jsonl,
                               options.out_dir / (stem + ".events.jsonl"));

  try {
    result.report = sim::run(config);
  } catch (const DivergenceError& e) {
    result.exit_code = kDiverged;
    result.error = e.what();
    return result;
  } catch (const std::exception& e) {
    // Data files that fail to load or partition are config problems.
    result.exit_code = kConfigInvalid;
    result.error = e.what();
    return result;
  }

  try {
    write_file(result.metrics_csv, [&](std::ostream& out) { sim::write_metrics_csv(*result.report, out); });
    write_file(result.events_jsonl,
               [&](std::ostream& out) { sim::write_events_jsonl(*result.report, out); });
  } catch (const std::exception& e) {
    result.exit_code = kConfigInvalid;
    result.error = e.what();
    return result;
  }
  result.exit_code = result.report->reached_target ? kTargetReached : kTargetMissed;
  return result;
}

std::vector<SweepRow> sweep(const fs::path& config_dir, const SweepOptions& options) {
  if (!fs::is_directory(config_dir)) {
    throw ConfigError("sweep: not a directory: " + config_dir.string());
  }
  std::vector<fs::path> configs;
  for (const auto& entry : fs::directory_iterator(config_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      configs.push_back(entry.path());
    }
  }
  std::sort(configs.begin(), configs.end());

  RunOptions run_opts;
  run_opts.out_dir = options.out_dir.empty() ? config_dir / "results" : options.out_dir;
  run_opts.audit_variance = options.audit_variance;

  std::vector<SweepRow> rows(configs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      // Each run gets its own output files, so runs share no mutable state.
      RunOptions opts = run_opts;
      opts.metrics_csv.reset();
      opts.events_jsonl.reset();
      const auto res = run_experiment(configs[i], opts);
      SweepRow& row = rows[i];
      row.config = configs[i].filename().string();
      if (res.config) {
        row.strategy = core::strategy_name(res.config->strategy);
        row.theta = core::strategy_theta(res.config->strategy);
        row.workers = res.config->workers;
      }
      if (res.report) {
        row.reached_target = res.report->reached_target;
        row.steps = res.report->ledger.in_parallel_steps();
        row.bytes_total = res.report->ledger.bytes_total();
        row.bytes_state = res.report->ledger.bytes_state();
        row.bytes_sync = res.report->ledger.bytes_sync();
        row.syncs = res.report->ledger.sync_events();
      }
      switch (res.exit_code) {
        case kTargetReached:
          row.status = "reached";
          break;
        case kTargetMissed:
          row.status = "missed";
          break;
        default:
          row.status = "failed";
          row.error = res.error;
      }
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, configs.size()));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work);
  }

  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    const double ta = a.theta.value_or(-1.0);
    const double tb = b.theta.value_or(-1.0);
    return std::tie(a.strategy, ta, a.workers, a.config) <
           std::tie(b.strategy, tb, b.workers, b.config);
  });
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    char theta[40] = "";
    if (r.theta) std::snprintf(theta, sizeof theta, "%.10g", *r.theta);
    out << r.config << ',' << r.strategy << ',' << theta << ',' << r.workers << ','
        << (r.reached_target ? "true" : "false") << ',' << r.steps << ',' << r.bytes_total << ','
        << r.bytes_state << ',' << r.bytes_sync << ',' << r.syncs << ',' << r.status << '\n';
  }
}

}  // namespace fda::cli
