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

// ML pipeline stage labels for source files: semantic scores at or above a
// threshold, keyword matches for the stages below it, Unknown otherwise.

#ifndef SMELLSCAN_STAGES_HPP_
#define SMELLSCAN_STAGES_HPP_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "smellscan/report.hpp"

namespace smellscan {

enum class StageLabel {
  DataCollection,
  DataProcessing,
  ModelTraining,
  ModelEvaluation,
  ModelDeployment,
  Unknown,
};

inline constexpr std::array<StageLabel, 5> kPipelineStages = {
    StageLabel::DataCollection, StageLabel::DataProcessing, StageLabel::ModelTraining,
    StageLabel::ModelEvaluation, StageLabel::ModelDeployment};

inline constexpr std::array<StageLabel, 6> kAllStageLabels = {
    StageLabel::DataCollection,  StageLabel::DataProcessing,  StageLabel::ModelTraining,
    StageLabel::ModelEvaluation, StageLabel::ModelDeployment, StageLabel::Unknown};

inline constexpr double kDefaultStageThreshold = 0.9;

std::string_view stage_name(StageLabel stage);
std::optional<StageLabel> stage_from_name(std::string_view name);

class StageConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidScore : public std::invalid_argument {
 public:
  InvalidScore(StageLabel stage, double value);
};

class KeywordMap {
 public:
  struct Pattern {
    std::string source;
    std::regex regex;
  };

  KeywordMap() = default;
  // Throws StageConfigError for Unknown or a pattern that does not compile.
  explicit KeywordMap(const std::map<StageLabel, std::vector<std::string>>& patterns);

  const std::map<StageLabel, std::vector<Pattern>>& patterns() const { return patterns_; }
  std::map<StageLabel, std::vector<std::string>> sources() const;

  // First pattern of `stage` found in `text`, if any.
  std::optional<std::string> first_match(StageLabel stage, std::string_view text) const;

 private:
  std::map<StageLabel, std::vector<Pattern>> patterns_;
};

struct StageDescriptions {
  std::vector<std::pair<StageLabel, std::string>> entries;

  // "This code is about:, " followed by "Stage: description" per stage.
  std::string prompt() const;
};

struct StageConfig {
  KeywordMap keywords;
  StageDescriptions descriptions;
};

StageConfig parse_stage_config(const nlohmann::json& document);
StageConfig load_stage_config(const std::filesystem::path& path);

struct Provenance {
  enum class Source { Semantic, Keyword, Unknown };
  Source source = Source::Unknown;
  double score = 0;     // Semantic
  std::string pattern;  // Keyword

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct StageAssignment {
  std::string file;
  std::map<StageLabel, Provenance> stages;

  bool has(StageLabel stage) const { return stages.contains(stage); }
  bool is_unknown() const { return has(StageLabel::Unknown); }

  friend bool operator==(const StageAssignment&, const StageAssignment&) = default;
};

using StageScores = std::map<StageLabel, double>;

struct ClassifyOptions {
  double threshold = kDefaultStageThreshold;
  // Match keywords only against import statements and called expressions.
  bool strict = false;
};

StageAssignment classify_file(std::string file, std::string_view text, const KeywordMap& keywords,
                              const std::optional<StageScores>& scores,
                              const ClassifyOptions& options = {});

std::vector<StageAssignment> mono_label_subset(const std::vector<StageAssignment>& assignments);

class UnassignedFile : public std::invalid_argument {
 public:
  explicit UnassignedFile(const std::string& path)
      : std::invalid_argument("no stage assignment for " + path) {}
};

enum class LabelMode { Multi, Mono };

using StageMatrix = std::map<StageLabel, std::map<SmellKind, double>>;

// Percentage of the files of each stage that contain the kind at least once.
StageMatrix smell_stage_distribution(const std::vector<StageAssignment>& assignments,
                                     const std::vector<Detection>& detections, LabelMode mode);

class FileSetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BinaryMetrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  double accuracy = 0;
};

struct ClassifierEvaluation {
  std::map<StageLabel, BinaryMetrics> per_stage;
  BinaryMetrics macro;
};

// One-vs-rest metrics over the five pipeline stages; the macro row is the
// unweighted mean. A stage absent from both sides scores 1.
ClassifierEvaluation evaluate_classifier(const std::vector<StageAssignment>& predicted,
                                         const std::vector<StageAssignment>& truth);

}  // namespace smellscan

#endif  // SMELLSCAN_STAGES_HPP_
