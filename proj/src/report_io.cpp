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

#include "fda/sim/report_io.hpp"

#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

namespace fda::sim {
namespace {

std::string fmt_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

nlohmann::json event(const StepRecord& rec, std::size_t workers, const char* type) {
  nlohmann::json j;
  j["type"] = type;
  j["step"] = rec.step;
  j["worker_count"] = workers;
  j["H"] = rec.h ? nlohmann::json(*rec.h) : nlohmann::json(nullptr);
  j["synced"] = rec.synced;
  j["bytes_cumulative"] = rec.bytes_cumulative;
  return j;
}

}  // namespace

void write_metrics_csv(const RunReport& report, std::ostream& out) {
  out << kMetricsCsvHeader << '\n';
  for (const auto& e : report.epochs) {
    out << e.epoch << ',' << fmt_real(e.test_accuracy) << ',' << fmt_real(e.train_loss) << ','
        << e.bytes_total << ',' << e.bytes_state << ',' << e.bytes_sync << ',' << e.steps << ','
        << e.syncs << '\n';
  }
}

void write_events_jsonl(const RunReport& report, std::ostream& out) {
  for (const auto& rec : report.steps) {
    auto j = event(rec, report.workers, "step");
    j["epoch"] = rec.epoch;
    j["train_loss"] = rec.train_loss;
    if (rec.variance) j["variance"] = *rec.variance;
    out << j.dump() << '\n';
    if (rec.synced) out << event(rec, report.workers, "sync").dump() << '\n';
  }
}

}  // namespace fda::sim
