// Copyright 2026 The smellscan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tool-wide configuration, loaded from JSON and echoed into every output.
//
//   {
//     "enabled_smells": ["List Comprehension", ...],
//     "truth_value_allowlist": ["isinstance", ...],
//     "call_star_min_run": 2,
//     "loc_mode": "physical-nonblank" | "exclude-comments",
//     "source_glob": "*.py",
//     "stage_threshold": 0.9,
//     "keyword_config": "path/to/stage_keywords.json",
//     "strict_keywords": false,
//     "adapter_endpoint": "http://127.0.0.1:8000",
//     "filter_criteria": {"min_stars": 1, ...}
//   }
//
// Every key is optional.

#ifndef SMELLSCAN_CONFIG_HPP_
#define SMELLSCAN_CONFIG_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "smellscan/metrics.hpp"
#include "smellscan/miner.hpp"
#include "smellscan/smells.hpp"
#include "smellscan/stages.hpp"

namespace smellscan {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Seeded keyword file shipped with the tool.
std::filesystem::path default_keyword_config();

struct ToolConfig {
  SmellConfig smells;
  LocMode loc_mode = LocMode::PhysicalNonblank;
  std::string source_glob = "*.py";
  double stage_threshold = kDefaultStageThreshold;
  std::string keyword_config = default_keyword_config().string();
  bool strict_keywords = false;
  std::string adapter_endpoint;
  FilterCriteria filter_criteria;
};

ToolConfig config_from_json(const nlohmann::json& document, ToolConfig base = {});
ToolConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const ToolConfig& config);

}  // namespace smellscan

#endif  // SMELLSCAN_CONFIG_HPP_
