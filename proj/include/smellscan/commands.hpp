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

// Subcommands of the command-line tool. Each returns the process exit code
// and never throws: 0 on success, 1 when --fail-on-smell finds detections,
// 2 on usage, input, configuration or API errors.

#ifndef SMELLSCAN_COMMANDS_HPP_
#define SMELLSCAN_COMMANDS_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "smellscan/config.hpp"
#include "smellscan/http.hpp"

namespace smellscan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitError = 2;

struct ScanCommand {
  std::vector<std::string> paths;
  std::string output;  // stdout when empty
  unsigned jobs = 0;
  bool fail_on_smell = false;
};

struct CompareCommand {
  // One report per project.
  std::vector<std::string> reports_a;
  std::vector<std::string> reports_b;
  Normalization normalization = Normalization::Kloc;
  std::string json_output;
};

struct ClassifyCommand {
  std::vector<std::string> paths;
  std::string report;  // scan report for the distribution matrices
  std::string output;  // stdout when empty
};

struct MineCommand {
  std::vector<std::string> keywords;
  std::optional<std::string> suffix;
  std::size_t top_n = 50;
  std::string api_base = "https://api.github.com";
  std::string token;
  std::string output;  // manifest file; each run appends a snapshot
  // Re-filter the newest snapshot of this manifest instead of searching.
  std::string refilter;
};

struct KappaCommand {
  std::string labels_a;
  std::string labels_b;
  bool json = false;
};

struct PlotCommand {
  std::vector<std::string> reports_a;
  std::vector<std::string> reports_b;
  Normalization normalization = Normalization::Kloc;
  std::size_t bins = 10;
  std::string output;  // stdout when empty
};

// Outbound HTTP for the adapter and the miner; tests substitute fakes.
struct Environment {
  std::shared_ptr<HttpTransport> transport;
};

int run_scan(const ScanCommand& cmd, const ToolConfig& config, std::ostream& out,
             std::ostream& err);
int run_compare(const CompareCommand& cmd, const ToolConfig& config, std::ostream& out,
                std::ostream& err);
int run_classify(const ClassifyCommand& cmd, const ToolConfig& config, const Environment& env,
                 std::ostream& out, std::ostream& err);
int run_mine(const MineCommand& cmd, const ToolConfig& config, const Environment& env,
             std::ostream& out, std::ostream& err);
int run_kappa(const KappaCommand& cmd, std::ostream& out, std::ostream& err);
int run_plot_data(const PlotCommand& cmd, const ToolConfig& config, std::ostream& out,
                  std::ostream& err);

// `id,label` rows with a header line; ids must be unique.
std::vector<std::pair<std::string, std::string>> read_label_file(const std::string& path);

}  // namespace smellscan

#endif  // SMELLSCAN_COMMANDS_HPP_
