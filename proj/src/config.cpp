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

#include "fda/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <string>

#include "fda/cli/theta.hpp"
#include "fda/detail/overloaded.hpp"
#include "fda/errors.hpp"
#include "fda/learner/idx.hpp"
#include "fda/learner/model.hpp"

namespace fda::cli {
namespace {

using nlohmann::json;
using detail::Overloaded;

// Reads one JSON object, remembering which keys were consumed so that
// typos surface as errors instead of silently falling back to defaults.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail("", "expected an object");
  }

  bool has(const char* key) const { return j_.contains(key); }

  const json& raw(const char* key) {
    seen_.insert(key);
    return j_.at(key);
  }

  ObjectReader child(const char* key) {
    if (!has(key)) fail(key, "missing");
    return ObjectReader(raw(key), where(key));
  }

  std::string str(const char* key) {
    if (!has(key)) fail(key, "missing");
    const json& v = raw(key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }
  std::string str(const char* key, std::string fallback) { return has(key) ? str(key) : fallback; }

  double real(const char* key) {
    if (!has(key)) fail(key, "missing");
    const json& v = raw(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    }
    fail(key, "expected a number");
  }
  double real(const char* key, double fallback) { return has(key) ? real(key) : fallback; }

  std::uint64_t uint(const char* key) {
    if (!has(key)) fail(key, "missing");
    const json& v = raw(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      fail(key, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }
  std::uint64_t uint(const char* key, std::uint64_t fallback) {
    return has(key) ? uint(key) : fallback;
  }
  std::size_t size(const char* key, std::size_t fallback) {
    return static_cast<std::size_t>(uint(key, fallback));
  }

  int integer(const char* key, int fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_number_integer()) fail(key, "expected an integer");
    return v.get<int>();
  }

  bool boolean(const char* key, bool fallback) {
    if (!has(key)) return fallback;
    const json& v = raw(key);
    if (!v.is_boolean()) fail(key, "expected true or false");
    return v.get<bool>();
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.count(key)) fail(key.c_str(), "unknown key");
    }
  }

  [[noreturn]] void fail(const char* key, const std::string& msg) const {
    throw ConfigError("config " + where(key) + ": " + msg);
  }

 private:
  std::string where(const char* key) const {
    if (*key == '\0') return path_.empty() ? "<root>" : path_;
    return path_.empty() ? key : path_ + "." + key;
  }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

learner::ModelKind parse_model_kind(ObjectReader& r) {
  const auto s = r.str("kind", "logistic_regression");
  if (s == "logistic_regression") return learner::ModelKind::LogisticRegression;
  if (s == "mlp") return learner::ModelKind::Mlp;
  r.fail("kind", "unknown model kind '" + s + "'");
}

learner::InitScheme parse_init(ObjectReader& r) {
  const auto s = r.str("init", "glorot_uniform");
  if (s == "glorot_uniform") return learner::InitScheme::GlorotUniform;
  if (s == "he_normal") return learner::InitScheme::HeNormal;
  r.fail("init", "unknown init scheme '" + s + "'");
}

learner::OptimizerKind parse_optimizer_kind(ObjectReader& r) {
  const auto s = r.str("kind", "sgd");
  if (s == "sgd") return learner::OptimizerKind::Sgd;
  if (s == "sgd_momentum") return learner::OptimizerKind::SgdMomentum;
  if (s == "adam") return learner::OptimizerKind::Adam;
  if (s == "adamw") return learner::OptimizerKind::AdamW;
  r.fail("kind", "unknown optimizer '" + s + "'");
}

sim::DatasetSpec parse_dataset(ObjectReader r, const std::filesystem::path& base_dir) {
  const auto source = r.str("source", "blobs");
  sim::DatasetSpec out;
  if (source == "blobs") {
    sim::BlobsSpec b;
    b.n = r.size("n", b.n);
    b.features = r.size("features", b.features);
    b.classes = r.size("classes", b.classes);
    b.stddev = r.real("stddev", b.stddev);
    b.test_n = r.size("test_n", b.test_n);
    out = b;
  } else if (source == "idx") {
    auto resolve = [&](const char* key) {
      std::filesystem::path p = r.str(key);
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      if (!std::filesystem::exists(p)) r.fail(key, "file not found: " + p.string());
      return p.string();
    };
    sim::IdxSpec s;
    s.train_images = resolve("train_images");
    s.train_labels = resolve("train_labels");
    s.test_images = resolve("test_images");
    s.test_labels = resolve("test_labels");
    out = s;
  } else {
    r.fail("source", "unknown dataset source '" + source + "'");
  }
  r.finish();
  return out;
}

sim::PartitionScheme parse_partition(ObjectReader r) {
  const auto scheme = r.str("scheme", "iid");
  sim::PartitionScheme out;
  if (scheme == "iid") {
    out = sim::Iid{};
  } else if (scheme == "noniid_fraction") {
    out = sim::NonIidFraction{r.real("percent")};
  } else if (scheme == "noniid_label") {
    sim::NonIidLabel s;
    s.label = r.integer("label", 0);
    s.holders = r.size("holders", 1);
    out = s;
  } else {
    r.fail("scheme", "unknown partition scheme '" + scheme + "'");
  }
  r.finish();
  return out;
}

// Parameter count of the configured model, for theta presets.
std::size_t implied_dim(const sim::DatasetSpec& dataset, const sim::ModelSpec& model) {
  learner::ModelDims dims;
  std::visit(Overloaded{
                 [&](const sim::BlobsSpec& b) {
                   dims.inputs = b.features;
                   dims.classes = b.classes;
                 },
                 [&](const sim::IdxSpec& s) {
                   const auto header = learner::read_idx_image_header(s.train_images);
                   dims.inputs = std::size_t{header.rows} * header.cols;
                   const auto labels = learner::read_idx_labels(s.train_labels);
                   dims.classes = labels.empty()
                                      ? 0
                                      : static_cast<std::size_t>(
                                            *std::max_element(labels.begin(), labels.end())) +
                                            1;
                 },
             },
             dataset);
  dims.hidden = model.kind == learner::ModelKind::Mlp ? model.hidden : 0;
  return learner::param_count(model.kind, dims);
}

double parse_theta(ObjectReader& r, const sim::DatasetSpec& dataset, const sim::ModelSpec& model) {
  const bool explicit_theta = r.has("theta");
  const bool preset = r.has("theta_preset");
  if (explicit_theta == preset) r.fail("theta", "give exactly one of theta or theta_preset");
  if (explicit_theta) {
    if (r.has("theta_scale")) r.fail("theta_scale", "only valid with theta_preset");
    return r.real("theta");
  }
  ThetaProfile profile;
  try {
    profile = parse_theta_profile(r.str("theta_preset"));
  } catch (const std::invalid_argument& e) {
    r.fail("theta_preset", e.what());
  }
  const double scale = r.real("theta_scale", 1.0);
  std::size_t dim = 0;
  try {
    dim = implied_dim(dataset, model);
  } catch (const std::exception& e) {
    r.fail("theta_preset", std::string("cannot size model: ") + e.what());
  }
  return scale * theta_preset(profile, dim);
}

core::SyncStrategy parse_strategy(ObjectReader r, const sim::DatasetSpec& dataset,
                                  const sim::ModelSpec& model) {
  const auto kind = r.str("kind");
  core::SyncStrategy out;
  if (kind == "sketch_fda") {
    core::SketchFda s;
    s.theta = parse_theta(r, dataset, model);
    s.rows = r.size("rows", s.rows);
    s.cols = r.size("cols", s.cols);
    if (r.has("seed")) s.seed = r.uint("seed");
    out = s;
  } else if (kind == "linear_fda") {
    out = core::LinearFda{parse_theta(r, dataset, model)};
  } else if (kind == "synchronous") {
    out = core::Synchronous{};
  } else if (kind == "local_sgd") {
    out = core::LocalSgd{r.size("tau", 1)};
  } else if (kind == "fedopt") {
    core::FedOpt f;
    f.local_epochs = r.size("local_epochs", 1);
    ObjectReader s = r.child("server");
    const auto server = s.str("kind", "sgd_momentum");
    if (server == "sgd_momentum") {
      core::ServerMomentum m;
      m.momentum = s.real("momentum", m.momentum);
      m.learning_rate = s.real("learning_rate", m.learning_rate);
      f.server = m;
    } else if (server == "adam") {
      core::ServerAdam a;
      a.learning_rate = s.real("learning_rate", a.learning_rate);
      a.beta1 = s.real("beta1", a.beta1);
      a.beta2 = s.real("beta2", a.beta2);
      a.epsilon = s.real("epsilon", a.epsilon);
      f.server = a;
    } else {
      s.fail("kind", "unknown server optimizer '" + server + "'");
    }
    s.finish();
    out = f;
  } else {
    r.fail("kind", "unknown strategy '" + kind + "'");
  }
  r.finish();
  return out;
}

json theta_json(double theta) {
  return std::isinf(theta) ? json("inf") : json(theta);
}

}  // namespace

sim::RunConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
  ObjectReader root(j, "");
  sim::RunConfig c;

  if (root.has("dataset")) c.dataset = parse_dataset(root.child("dataset"), base_dir);

  if (root.has("model")) {
    ObjectReader m = root.child("model");
    c.model.kind = parse_model_kind(m);
    c.model.hidden = m.size("hidden", 0);
    c.model.init = parse_init(m);
    m.finish();
  }

  if (root.has("optimizer")) {
    ObjectReader o = root.child("optimizer");
    c.optimizer = learner::OptimizerConfig::defaults(parse_optimizer_kind(o));
    c.optimizer.learning_rate = o.real("learning_rate", c.optimizer.learning_rate);
    c.optimizer.momentum = o.real("momentum", c.optimizer.momentum);
    c.optimizer.nesterov = o.boolean("nesterov", c.optimizer.nesterov);
    c.optimizer.beta1 = o.real("beta1", c.optimizer.beta1);
    c.optimizer.beta2 = o.real("beta2", c.optimizer.beta2);
    c.optimizer.epsilon = o.real("epsilon", c.optimizer.epsilon);
    c.optimizer.weight_decay = o.real("weight_decay", c.optimizer.weight_decay);
    o.finish();
  }

  c.workers = root.size("workers", c.workers);
  c.batch_size = root.size("batch_size", c.batch_size);
  if (root.has("partition")) c.partition = parse_partition(root.child("partition"));
  c.strategy = parse_strategy(root.child("strategy"), c.dataset, c.model);
  c.accuracy_target = root.real("accuracy_target", c.accuracy_target);
  c.max_epochs = root.size("max_epochs", c.max_epochs);
  c.seed = root.uint("seed", c.seed);
  c.audit_variance = root.boolean("audit_variance", c.audit_variance);

  if (root.has("output")) {
    ObjectReader o = root.child("output");
    auto resolve = [&](const char* key) {
      std::filesystem::path p = o.str(key, "");
      if (!p.empty() && p.is_relative() && !base_dir.empty()) p = base_dir / p;
      return p.string();
    };
    c.output.metrics_csv = resolve("metrics_csv");
    c.output.events_jsonl = resolve("events_jsonl");
    o.finish();
  }
  root.finish();

  sim::validate(c);
  return c;
}

sim::RunConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  return parse_config(j, path.parent_path());
}

json to_json(const sim::RunConfig& c) {
  json j;
  std::visit(Overloaded{
                 [&](const sim::BlobsSpec& b) {
                   j["dataset"] = {{"source", "blobs"},   {"n", b.n},
                                   {"features", b.features}, {"classes", b.classes},
                                   {"stddev", b.stddev},   {"test_n", b.test_n}};
                 },
                 [&](const sim::IdxSpec& s) {
                   j["dataset"] = {{"source", "idx"},
                                   {"train_images", s.train_images},
                                   {"train_labels", s.train_labels},
                                   {"test_images", s.test_images},
                                   {"test_labels", s.test_labels}};
                 },
             },
             c.dataset);

  j["model"] = {{"kind", std::string(learner::to_string(c.model.kind))},
                {"hidden", c.model.hidden},
                {"init", std::string(learner::to_string(c.model.init))}};

  const auto& o = c.optimizer;
  j["optimizer"] = {{"kind", std::string(learner::to_string(o.kind))},
                    {"learning_rate", o.learning_rate},
                    {"momentum", o.momentum},
                    {"nesterov", o.nesterov},
                    {"beta1", o.beta1},
                    {"beta2", o.beta2},
                    {"epsilon", o.epsilon},
                    {"weight_decay", o.weight_decay}};

  j["workers"] = c.workers;
  j["batch_size"] = c.batch_size;

  std::visit(Overloaded{
                 [&](const sim::Iid&) { j["partition"] = {{"scheme", "iid"}}; },
                 [&](const sim::NonIidFraction& s) {
                   j["partition"] = {{"scheme", "noniid_fraction"}, {"percent", s.percent}};
                 },
                 [&](const sim::NonIidLabel& s) {
                   j["partition"] = {
                       {"scheme", "noniid_label"}, {"label", s.label}, {"holders", s.holders}};
                 },
             },
             c.partition);

  std::visit(
      Overloaded{
          [&](const core::SketchFda& s) {
            j["strategy"] = {{"kind", "sketch_fda"},
                             {"theta", theta_json(s.theta)},
                             {"rows", s.rows},
                             {"cols", s.cols}};
            if (s.seed) j["strategy"]["seed"] = *s.seed;
          },
          [&](const core::LinearFda& s) {
            j["strategy"] = {{"kind", "linear_fda"}, {"theta", theta_json(s.theta)}};
          },
          [&](const core::Synchronous&) { j["strategy"] = {{"kind", "synchronous"}}; },
          [&](const core::LocalSgd& s) { j["strategy"] = {{"kind", "local_sgd"}, {"tau", s.tau}}; },
          [&](const core::FedOpt& f) {
            json server = std::visit(
                Overloaded{
                    [](const core::ServerMomentum& m) {
                      return json{{"kind", "sgd_momentum"},
                                  {"momentum", m.momentum},
                                  {"learning_rate", m.learning_rate}};
                    },
                    [](const core::ServerAdam& a) {
                      return json{{"kind", "adam"},
                                  {"learning_rate", a.learning_rate},
                                  {"beta1", a.beta1},
                                  {"beta2", a.beta2},
                                  {"epsilon", a.epsilon}};
                    },
                },
                f.server);
            j["strategy"] = {{"kind", "fedopt"}, {"local_epochs", f.local_epochs}, {"server", server}};
          },
      },
      c.strategy);

  j["accuracy_target"] = c.accuracy_target;
  j["max_epochs"] = c.max_epochs;
  j["seed"] = c.seed;
  j["audit_variance"] = c.audit_variance;
  if (!c.output.metrics_csv.empty() || !c.output.events_jsonl.empty()) {
    j["output"] = {{"metrics_csv", c.output.metrics_csv}, {"events_jsonl", c.output.events_jsonl}};
  }
  return j;
}

}  // namespace fda::cli
