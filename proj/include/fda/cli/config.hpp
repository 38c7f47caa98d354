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

// JSON run configuration. See docs/config.md for the schema.

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "fda/sim/run_config.hpp"

namespace fda::cli {

/// Parses and validates a config tree. Relative IDX paths are resolved
/// against `base_dir`. A `theta_preset` (with optional `theta_scale`) is
/// resolved to a number using the model size implied by the dataset.
/// Throws ConfigError.
sim::RunConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

/// Reads a config file; paths inside resolve relative to its directory.
sim::RunConfig load_config_file(const std::filesystem::path& path);

/// Fully explicit tree: parse_config(to_json(c)) == c.
nlohmann::json to_json(const sim::RunConfig& config);

}  // namespace fda::cli
