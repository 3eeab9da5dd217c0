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

// Line counts, per-project smell densities and corpus comparison.

#ifndef SMELLSCAN_METRICS_HPP_
#define SMELLSCAN_METRICS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smellscan/report.hpp"
#include "smellscan/stats.hpp"

namespace smellscan {

enum class LocMode { PhysicalNonblank, ExcludeComments };

std::string_view loc_mode_name(LocMode mode);
std::optional<LocMode> loc_mode_from_name(std::string_view name);

// Lines with any non-whitespace character. ExcludeComments also drops lines
// whose first token is a comment; lines inside multi-line strings count.
std::size_t count_loc(std::string_view text, LocMode mode = LocMode::PhysicalNonblank);

class MissingLoc : public std::invalid_argument {
 public:
  explicit MissingLoc(const std::string& path)
      : std::invalid_argument("no line count for " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class EmptyCorpus : public std::invalid_argument {
 public:
  EmptyCorpus() : std::invalid_argument("corpus has no projects") {}
};

struct ProjectMetrics {
  std::string project_id;
  std::size_t loc = 0;
  std::size_t smelly_files = 0;
  std::map<SmellKind, std::size_t> counts_by_kind;
  std::map<SmellKind, double> density_per_kloc_by_kind;
  // Empty when the project has no smelly file.
  std::map<SmellKind, double> per_smelly_file_by_kind;

  std::size_t total_count() const;
  double total_density_per_kloc() const;
  std::optional<double> total_per_smelly_file() const;
};

// Aggregates detections over the files of loc_by_file. Every detection file
// must have a line count.
ProjectMetrics project_metrics(std::string project_id, const std::vector<Detection>& detections,
                               const std::map<std::string, std::size_t>& loc_by_file);
ProjectMetrics project_metrics(std::string project_id, const ScanReport& report);

enum class Normalization { Kloc, SmellyFile };

std::string_view normalization_name(Normalization n);
std::optional<Normalization> normalization_from_name(std::string_view name);

struct KindComparison {
  std::optional<SmellKind> kind;  // empty for the all-kinds row
  double mean_a = 0;
  double mean_b = 0;
  MWUResult test;
  bool significant = false;
};

inline constexpr double kSignificance = 0.05;

// One row per kind, then the all-kinds row. A project without smelly files
// contributes 0 under smelly-file normalization.
std::vector<KindComparison> compare_corpora(const std::vector<ProjectMetrics>& a,
                                            const std::vector<ProjectMetrics>& b,
                                            Normalization normalization);

}  // namespace smellscan

#endif  // SMELLSCAN_METRICS_HPP_
