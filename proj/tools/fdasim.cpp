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

// fdasim: command-line front end for the FDA simulator.
//
//   fdasim run <config.json> [--out-dir DIR] [--metrics FILE] [--events FILE] [--audit-variance]
//   fdasim sweep <dir> [--out FILE] [--out-dir DIR] [--jobs N] [--audit-variance]
//   fdasim theta --profile {fl|balanced|hpc} --dim D

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fda/cli/experiment.hpp"
#include "fda/cli/theta.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Federated Dynamic Averaging simulator"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run one experiment config");
  std::string config_path;
  fda::cli::RunOptions run_opts;
  std::string out_dir = ".";
  std::string metrics_path;
  std::string events_path;
  run->add_option("config", config_path, "JSON run config")->required();
  run->add_option("--out-dir", out_dir, "Directory for default-named outputs");
  run->add_option("--metrics", metrics_path, "Per-epoch metrics CSV path");
  run->add_option("--events", events_path, "Step event log (JSONL) path");
  run->add_flag("--audit-variance", run_opts.audit_variance,
                "Recompute exact model variance at every step");

  auto* sweep = app.add_subcommand("sweep", "Run every *.json config in a directory");
  std::string sweep_dir;
  std::string sweep_out;
  std::string sweep_out_dir;
  fda::cli::SweepOptions sweep_opts;
  sweep->add_option("dir", sweep_dir, "Directory of configs")->required();
  sweep->add_option("--out", sweep_out, "Aggregate CSV (default: stdout)");
  sweep->add_option("--out-dir", sweep_out_dir, "Per-run outputs (default: <dir>/results)");
  sweep->add_option("--jobs", sweep_opts.jobs, "Concurrent runs")->check(CLI::PositiveNumber);
  sweep->add_flag("--audit-variance", sweep_opts.audit_variance, "Audit variance in every run");

  auto* theta = app.add_subcommand("theta", "Print a rule-of-thumb variance threshold");
  std::string profile;
  std::size_t dim = 0;
  theta->add_option("--profile", profile, "fl | balanced | hpc")->required();
  theta->add_option("--dim", dim, "Model parameter count")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fda::cli::kConfigInvalid;
  }

  if (*run) {
    run_opts.out_dir = out_dir;
    if (!metrics_path.empty()) run_opts.metrics_csv = metrics_path;
    if (!events_path.empty()) run_opts.events_jsonl = events_path;
    const auto res = fda::cli::run_experiment(config_path, run_opts);
    if (!res.error.empty()) std::cerr << "fdasim: " << res.error << '\n';
    if (res.report) {
      const auto& r = *res.report;
      std::cerr << r.strategy << ": " << (r.reached_target ? "reached" : "missed")
                << " target, accuracy " << r.final_accuracy << ", steps "
                << r.ledger.in_parallel_steps() << ", syncs " << r.ledger.sync_events()
                << ", bytes " << r.ledger.bytes_total() << '\n'
                << "metrics: " << res.metrics_csv.string() << '\n'
                << "events:  " << res.events_jsonl.string() << '\n';
    }
    return res.exit_code;
  }

  if (*sweep) {
    if (!sweep_out_dir.empty()) sweep_opts.out_dir = sweep_out_dir;
    std::vector<fda::cli::SweepRow> rows;
    try {
      rows = fda::cli::sweep(sweep_dir, sweep_opts);
    } catch (const std::exception& e) {
      std::cerr << "fdasim: " << e.what() << '\n';
      return fda::cli::kConfigInvalid;
    }
    for (const auto& r : rows) {
      if (r.status == "failed") std::cerr << "fdasim: " << r.config << ": " << r.error << '\n';
    }
    if (sweep_out.empty()) {
      fda::cli::write_sweep_csv(rows, std::cout);
    } else {
      std::ofstream out(sweep_out, std::ios::binary | std::ios::trunc);
      if (!out) {
        std::cerr << "fdasim: cannot write " << sweep_out << '\n';
        return fda::cli::kConfigInvalid;
      }
      fda::cli::write_sweep_csv(rows, out);
    }
    return 0;
  }

  try {
    const auto p = fda::cli::parse_theta_profile(profile);
    std::printf("%.10g\n", fda::cli::theta_preset(p, dim));
  } catch (const std::exception& e) {
    std::cerr << "fdasim: " << e.what() << '\n';
    return fda::cli::kConfigInvalid;
  }
  return 0;
}
