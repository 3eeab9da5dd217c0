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

#include "smellscan/config.hpp"

#include <fstream>

namespace smellscan {

using nlohmann::json;

std::filesystem::path default_keyword_config() {
  if (const char* dir = std::getenv("SMELLSCAN_DATA_DIR"); dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / "stage_keywords.json";
  }
  return std::filesystem::path(SMELLSCAN_DATA_DIR) / "stage_keywords.json";
}

ToolConfig config_from_json(const json& document, ToolConfig c) {
  if (!document.is_object()) throw ConfigError("configuration must be a JSON object");
  try {
    for (const auto& [key, value] : document.items()) {
      if (key == "enabled_smells") {
        c.smells.enabled.clear();
        for (const json& name : value) {
          const auto kind = smell_from_name(name.get<std::string>());
          if (!kind) throw ConfigError("unknown smell \"" + name.get<std::string>() + "\"");
          c.smells.enabled.insert(*kind);
        }
      } else if (key == "truth_value_allowlist") {
        c.smells.truth_value_allowlist = value.get<std::vector<std::string>>();
      } else if (key == "call_star_min_run") {
        c.smells.call_star_min_run = value.get<int>();
        if (c.smells.call_star_min_run < 2) throw ConfigError("call_star_min_run must be >= 2");
      } else if (key == "loc_mode") {
        const auto mode = loc_mode_from_name(value.get<std::string>());
        if (!mode) throw ConfigError("loc_mode must be physical-nonblank or exclude-comments");
        c.loc_mode = *mode;
      } else if (key == "source_glob") {
        c.source_glob = value.get<std::string>();
      } else if (key == "stage_threshold") {
        c.stage_threshold = value.get<double>();
        if (!(c.stage_threshold > 0 && c.stage_threshold <= 1)) {
          throw ConfigError("stage_threshold must lie in (0, 1]");
        }
      } else if (key == "keyword_config") {
        c.keyword_config = value.get<std::string>();
      } else if (key == "strict_keywords") {
        c.strict_keywords = value.get<bool>();
      } else if (key == "adapter_endpoint") {
        c.adapter_endpoint = value.get<std::string>();
      } else if (key == "filter_criteria") {
        c.filter_criteria = criteria_from_json(value, c.filter_criteria);
      } else {
        throw ConfigError("unknown configuration key \"" + key + "\"");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("configuration: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("configuration: ") + e.what());
  }
  return c;
}

ToolConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read configuration " + path.string());
  try {
    return config_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

json to_json(const ToolConfig& c) {
  json enabled = json::array();
  for (SmellKind k : kAllSmellKinds) {
    if (c.smells.enabled.contains(k)) enabled.push_back(std::string(smell_name(k)));
  }
  return {{"enabled_smells", enabled},
          {"truth_value_allowlist", c.smells.truth_value_allowlist},
          {"call_star_min_run", c.smells.call_star_min_run},
          {"loc_mode", std::string(loc_mode_name(c.loc_mode))},
          {"source_glob", c.source_glob},
          {"stage_threshold", c.stage_threshold},
          {"keyword_config", c.keyword_config},
          {"strict_keywords", c.strict_keywords},
          {"adapter_endpoint", c.adapter_endpoint},
          {"filter_criteria", to_json(c.filter_criteria)}};
}

}  // namespace smellscan
