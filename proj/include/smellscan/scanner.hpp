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

// Directory scanning: file discovery, parallel per-file analysis and an
// ordered merge into one report.

#ifndef SMELLSCAN_SCANNER_HPP_
#define SMELLSCAN_SCANNER_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "smellscan/config.hpp"
#include "smellscan/report.hpp"

namespace smellscan {

// Files under `roots` whose name matches `glob`, sorted. A root that is a
// file is taken as is. Throws std::filesystem::filesystem_error for a
// missing root.
std::vector<std::filesystem::path> discover_sources(const std::vector<std::filesystem::path>& roots,
                                                    const std::string& glob);

struct FileOutcome {
  std::string path;
  bool parsed = false;
  std::string error;
  std::size_t loc = 0;
  std::vector<Detection> detections;
};

FileOutcome scan_file(const std::filesystem::path& path, const ToolConfig& config);

// jobs == 0 uses the hardware concurrency. The report does not depend on it.
ScanReport scan_paths(const std::vector<std::filesystem::path>& roots, const ToolConfig& config,
                      unsigned jobs = 0);

}  // namespace smellscan

#endif  // SMELLSCAN_SCANNER_HPP_
