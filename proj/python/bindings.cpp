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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "fda/cli/config.hpp"
#include "fda/cli/experiment.hpp"
#include "fda/cli/theta.hpp"
#include "fda/core/variance.hpp"
#include "fda/errors.hpp"
#include "fda/learner/dataset.hpp"
#include "fda/sim/simulator.hpp"
#include "fda/sketch.hpp"
#include "fda/vecmath.hpp"

namespace py = pybind11;

namespace {

using Vec = std::vector<double>;

fda::ParamVector pv(const Vec& v) { return fda::ParamVector(v); }

std::vector<fda::ParamVector> pvs(const std::vector<Vec>& vs) {
  std::vector<fda::ParamVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.emplace_back(v);
  return out;
}

double mean_norm_sq(const std::vector<fda::ParamVector>& us) {
  double s = 0.0;
  for (const auto& u : us) s += fda::norm_sq(u);
  return s / static_cast<double>(us.size());
}

py::dict report_dict(const fda::sim::RunReport& r) {
  py::list epochs;
  for (const auto& e : r.epochs) {
    py::dict d;
    d["epoch"] = e.epoch;
    d["test_accuracy"] = e.test_accuracy;
    d["test_loss"] = e.test_loss;
    d["train_loss"] = e.train_loss;
    d["bytes_total"] = e.bytes_total;
    d["bytes_state"] = e.bytes_state;
    d["bytes_sync"] = e.bytes_sync;
    d["steps"] = e.steps;
    d["syncs"] = e.syncs;
    epochs.append(d);
  }
  py::list h, variance, synced;
  for (const auto& s : r.steps) {
    h.append(s.h ? py::cast(*s.h) : py::none());
    variance.append(s.variance ? py::cast(*s.variance) : py::none());
    synced.append(s.synced);
  }
  py::dict out;
  out["strategy"] = r.strategy;
  out["theta"] = r.theta;
  out["workers"] = r.workers;
  out["dim"] = r.dim;
  out["steps"] = r.total_steps();
  out["syncs"] = r.total_syncs();
  out["bytes_total"] = r.ledger.bytes_total();
  out["bytes_state"] = r.ledger.bytes_state();
  out["bytes_sync"] = r.ledger.bytes_sync();
  out["reached_target"] = r.reached_target;
  out["final_accuracy"] = r.final_accuracy;
  out["final_model"] = r.final_model.values();
  out["epochs"] = epochs;
  out["step_h"] = h;
  out["step_variance"] = variance;
  out["step_synced"] = synced;
  return out;
}

}  // namespace

PYBIND11_MODULE(_fdasim, m) {
  m.doc() = "Variance-triggered model averaging simulator (C++ core).";

  py::register_exception<fda::DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<fda::KindMismatch>(m, "KindMismatch", PyExc_ValueError);
  py::register_exception<fda::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<fda::DivergenceError>(m, "DivergenceError", PyExc_RuntimeError);

  m.def("dot", [](const Vec& a, const Vec& b) { return fda::dot(pv(a), pv(b)); });
  m.def("norm_sq", [](const Vec& v) { return fda::norm_sq(pv(v)); });
  m.def("average", [](const std::vector<Vec>& vs) { return fda::average(pvs(vs)).values(); });

  py::class_<fda::AmsSketch>(m, "AmsSketch")
      .def_property_readonly("rows", &fda::AmsSketch::rows)
      .def_property_readonly("cols", &fda::AmsSketch::cols)
      .def("cells", [](const fda::AmsSketch& s) {
        return std::vector<double>(s.cells().begin(), s.cells().end());
      }, "Row-major cell values.")
      .def("m2_estimate", &fda::m2_estimate)
      .def("__add__", &fda::sketch_add)
      .def("__mul__", [](const fda::AmsSketch& s, double a) { return fda::sketch_scale(a, s); })
      .def("__rmul__", [](const fda::AmsSketch& s, double a) { return fda::sketch_scale(a, s); });

  py::class_<fda::SketchTransform>(m, "SketchTransform")
      .def(py::init(&fda::SketchTransform::make), py::arg("dim"), py::arg("rows") = 5,
           py::arg("cols") = 250, py::arg("seed") = 0)
      .def_property_readonly("dim", &fda::SketchTransform::dim)
      .def_property_readonly("rows", &fda::SketchTransform::rows)
      .def_property_readonly("cols", &fda::SketchTransform::cols)
      .def_property_readonly("payload_bytes", &fda::SketchTransform::payload_bytes)
      .def("apply", [](const fda::SketchTransform& t, const Vec& v) { return t.apply(pv(v)); });

  m.def("sketch_epsilon", &fda::sketch_epsilon, py::arg("cols"));

  m.def("variance_exact", [](const std::vector<Vec>& models) {
    return fda::core::variance_exact(pvs(models));
  });
  m.def("variance_from_drifts", [](const std::vector<Vec>& drifts) {
    const auto us = pvs(drifts);
    return fda::core::variance_from_drifts(mean_norm_sq(us), fda::average(us));
  }, "Variance of the models w_sync + u_k, from the drifts alone.");
  m.def("compute_xi", [](const Vec& now, const Vec& prev) -> std::optional<Vec> {
    const auto xi = fda::core::compute_xi(pv(now), pv(prev));
    if (!xi.present()) return std::nullopt;
    return xi.direction().values();
  }, "Unit vector along now - prev, or None when they coincide.");
  m.def("h_linear", [](const std::vector<Vec>& drifts, const std::optional<Vec>& xi) {
    const auto x = xi ? fda::core::Xi::along(pv(*xi)) : fda::core::Xi::absent();
    std::vector<fda::core::LocalState> states;
    for (const auto& u : pvs(drifts)) states.push_back(fda::core::make_local_state_linear(u, x));
    return fda::core::h_linear(fda::core::average_states(states));
  }, py::arg("drifts"), py::arg("xi") = py::none());
  m.def("h_sketch", [](const std::vector<Vec>& drifts, const fda::SketchTransform& t) {
    std::vector<fda::core::LocalState> states;
    for (const auto& u : pvs(drifts)) states.push_back(fda::core::make_local_state_sketch(u, t));
    return fda::core::h_sketch(fda::core::average_states(states), fda::sketch_epsilon(t.cols()));
  }, py::arg("drifts"), py::arg("transform"));

  m.def("theta_preset", [](const std::string& profile, std::size_t dim) {
    return fda::cli::theta_preset(fda::cli::parse_theta_profile(profile), dim);
  }, py::arg("profile"), py::arg("dim"));

  m.def("make_blobs", [](std::size_t n, std::size_t p, std::size_t c, std::uint64_t seed,
                         double stddev) {
    const auto d = fda::learner::make_blobs(n, p, c, seed, stddev);
    py::dict out;
    out["features"] = d.features();
    out["labels"] = d.labels();
    out["num_features"] = d.num_features();
    out["num_classes"] = d.num_classes();
    return out;
  }, py::arg("n"), py::arg("num_features"), py::arg("num_classes"), py::arg("seed") = 0,
        py::arg("stddev") = 1.0, "Flat row-major features and labels.");

  m.def("run", [](const std::string& config_json, const std::filesystem::path& base_dir,
                  bool audit_variance) {
    fda::sim::RunConfig cfg;
    try {
      cfg = fda::cli::parse_config(nlohmann::json::parse(config_json), base_dir);
    } catch (const nlohmann::json::exception& e) {
      throw fda::ConfigError(e.what());
    }
    cfg.audit_variance = cfg.audit_variance || audit_variance;
    fda::sim::RunReport report;
    {
      py::gil_scoped_release release;
      report = fda::sim::run(cfg);
    }
    return report_dict(report);
  }, py::arg("config_json"), py::arg("base_dir") = std::filesystem::path{},
        py::arg("audit_variance") = false,
        "Runs a JSON config in memory and returns the report as a dict.");

  m.def("run_experiment", [](const std::filesystem::path& config, const std::filesystem::path& out_dir,
                             bool audit_variance) {
    fda::cli::RunOptions opt;
    opt.out_dir = out_dir;
    opt.audit_variance = audit_variance;
    py::gil_scoped_release release;
    const auto res = fda::cli::run_experiment(config, opt);
    return std::make_tuple(res.exit_code, res.metrics_csv, res.events_jsonl, res.error);
  }, py::arg("config"), py::arg("out_dir") = std::filesystem::path("."),
        py::arg("audit_variance") = false,
        "Same as `fdasim run`: returns (exit_code, metrics_csv, events_jsonl, error).");
}
