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

#include "smellscan/scanner.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace smellscan {

namespace fs = std::filesystem;

std::vector<fs::path> discover_sources(const std::vector<fs::path>& roots,
                                       const std::string& glob) {
  std::vector<fs::path> out;
  for (const fs::path& root : roots) {
    if (!fs::exists(root)) {
      throw fs::filesystem_error("no such file or directory", root,
                                 std::make_error_code(std::errc::no_such_file_or_directory));
    }
    if (!fs::is_directory(root)) {
      out.push_back(root);
      continue;
    }
    for (auto it =
             fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied);
         it != fs::recursive_directory_iterator(); ++it) {
      if (!it->is_regular_file()) continue;
      const std::string name = it->path().filename().string();
      if (fnmatch(glob.c_str(), name.c_str(), 0) == 0) out.push_back(it->path());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FileOutcome scan_file(const fs::path& path, const ToolConfig& config) {
  FileOutcome outcome;
  outcome.path = path.generic_string();
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    outcome.error = outcome.path + ": cannot read file";
    return outcome;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    const SourceUnit unit = parse_unit(outcome.path, buffer.str());
    outcome.loc = count_loc(unit.text(), config.loc_mode);
    outcome.detections = scan_unit(unit, config.smells);
    outcome.parsed = true;
  } catch (const ParseError& e) {
    outcome.error = e.what();
  }
  return outcome;
}

ScanReport scan_paths(const std::vector<fs::path>& roots, const ToolConfig& config, unsigned jobs) {
  const std::vector<fs::path> files = discover_sources(roots, config.source_glob);
  std::vector<FileOutcome> outcomes(files.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, files.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      outcomes[i] = scan_file(files[i], config);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  ScanReport report;
  report.scanned_files = files.size();
  report.config = to_json(config);
  for (FileOutcome& o : outcomes) {
    if (!o.parsed) {
      report.parse_errors.push_back({o.path, o.error});
      continue;
    }
    report.loc_by_file[o.path] = o.loc;
    std::move(o.detections.begin(), o.detections.end(), std::back_inserter(report.detections));
  }
  return report;
}

}  // namespace smellscan
