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

#include "fda/sim/run_config.hpp"

#include <string>

#include "fda/detail/overloaded.hpp"
#include "fda/errors.hpp"
#include "fda/learner/idx.hpp"
#include "fda/seed.hpp"

namespace fda::sim {

void validate(const RunConfig& config) {
  if (config.workers < 1) throw ConfigError("workers must be >= 1");
  if (config.batch_size < 1) throw ConfigError("batch_size must be >= 1");
  if (config.max_epochs < 1) throw ConfigError("max_epochs must be >= 1");
  if (!(config.accuracy_target >= 0.0 && config.accuracy_target <= 1.0)) {
    throw ConfigError("accuracy_target must lie in [0, 1]");
  }
  if (config.model.kind == learner::ModelKind::Mlp && config.model.hidden < 1) {
    throw ConfigError("mlp model needs hidden >= 1");
  }
  if (const auto* blobs = std::get_if<BlobsSpec>(&config.dataset)) {
    if (blobs->n < 1 || blobs->features < 1 || blobs->classes < 2 || blobs->test_n < 1) {
      throw ConfigError("blobs need n, features, test_n >= 1 and classes >= 2");
    }
  }
  try {
    core::validate(config.strategy);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

LoadedData load_data(const DatasetSpec& spec, std::uint64_t run_seed) {
  return std::visit(
      detail::Overloaded{
          [&](const BlobsSpec& b) {
            return LoadedData{
                learner::make_blobs(b.n, b.features, b.classes, derive_seed(run_seed, "data"),
                                    b.stddev),
                learner::make_blobs(b.test_n, b.features, b.classes,
                                    derive_seed(run_seed, "data_test"), b.stddev)};
          },
          [](const IdxSpec& s) {
            auto train = learner::load_idx(s.train_images, s.train_labels);
            auto test = learner::load_idx(s.test_images, s.test_labels, train.num_classes());
            return LoadedData{std::move(train), std::move(test)};
          },
      },
      spec);
}

learner::ModelDims model_dims(const ModelSpec& spec, const learner::Dataset& train) {
  learner::ModelDims dims;
  dims.inputs = train.num_features();
  dims.classes = train.num_classes();
  dims.hidden = spec.kind == learner::ModelKind::Mlp ? spec.hidden : 0;
  return dims;
}

}  // namespace fda::sim
