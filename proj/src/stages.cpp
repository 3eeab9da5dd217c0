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

#include "smellscan/stages.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "smellscan/syntax.hpp"

namespace smellscan {

using nlohmann::json;

namespace {

std::string format_score(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

// Import statements and called expressions, the only text strict matching
// looks at.
std::vector<std::string> strict_fragments(std::string_view text) {
  std::vector<std::string> out;
  try {
    const SourceUnit unit = parse_unit("<stage>", std::string(text));
    walk(unit.tree(), [&](const Node& n) {
      if (n.is(NodeKind::Import) || n.is(NodeKind::ImportFrom)) {
        out.emplace_back(unit.slice(n.range));
        return false;
      }
      if (n.is(NodeKind::Call)) out.emplace_back(unit.slice(n.child(0)->range));
      return true;
    });
  } catch (const ParseError&) {
  }
  return out;
}

}  // namespace

std::string_view stage_name(StageLabel stage) {
  switch (stage) {
    case StageLabel::DataCollection:
      return "Data Collection";
    case StageLabel::DataProcessing:
      return "Data Processing";
    case StageLabel::ModelTraining:
      return "Model Training";
    case StageLabel::ModelEvaluation:
      return "Model Evaluation";
    case StageLabel::ModelDeployment:
      return "Model Deployment";
    case StageLabel::Unknown:
      break;
  }
  return "Unknown";
}

std::optional<StageLabel> stage_from_name(std::string_view name) {
  for (StageLabel s : kAllStageLabels) {
    if (stage_name(s) == name) return s;
  }
  return std::nullopt;
}

InvalidScore::InvalidScore(StageLabel stage, double value)
    : std::invalid_argument("score for " + std::string(stage_name(stage)) + " is " +
                            format_score(value) + ", expected a value in [0, 1]") {}

KeywordMap::KeywordMap(const std::map<StageLabel, std::vector<std::string>>& patterns) {
  for (const auto& [stage, sources] : patterns) {
    if (stage == StageLabel::Unknown) throw StageConfigError("Unknown takes no keywords");
    auto& compiled = patterns_[stage];
    for (const std::string& source : sources) {
      try {
        compiled.push_back({source, std::regex(source, std::regex::ECMAScript)});
      } catch (const std::regex_error& e) {
        throw StageConfigError("keyword \"" + source + "\" for " + std::string(stage_name(stage)) +
                               ": " + e.what());
      }
    }
  }
}

std::map<StageLabel, std::vector<std::string>> KeywordMap::sources() const {
  std::map<StageLabel, std::vector<std::string>> out;
  for (const auto& [stage, patterns] : patterns_) {
    for (const auto& p : patterns) out[stage].push_back(p.source);
  }
  return out;
}

std::optional<std::string> KeywordMap::first_match(StageLabel stage, std::string_view text) const {
  auto it = patterns_.find(stage);
  if (it == patterns_.end()) return std::nullopt;
  for (const Pattern& p : it->second) {
    if (std::regex_search(text.begin(), text.end(), p.regex)) return p.source;
  }
  return std::nullopt;
}

std::string StageDescriptions::prompt() const {
  std::string out = "This code is about:";
  out += ", ";
  for (const auto& [stage, description] : entries) {
    out += std::string(stage_name(stage)) + ": " + description;
  }
  return out;
}

StageConfig parse_stage_config(const json& document) {
  auto stage_of = [](const std::string& name) {
    const auto stage = stage_from_name(name);
    if (!stage || *stage == StageLabel::Unknown) {
      throw StageConfigError("unknown stage \"" + name + "\"");
    }
    return *stage;
  };
  if (!document.is_object()) throw StageConfigError("stage config must be a JSON object");
  StageConfig config;
  std::map<StageLabel, std::vector<std::string>> patterns;
  if (auto it = document.find("keywords"); it != document.end()) {
    if (!it->is_object()) throw StageConfigError("\"keywords\" must be an object");
    for (const auto& [name, list] : it->items()) {
      if (!list.is_array()) throw StageConfigError("keywords of " + name + " must be a list");
      auto& out = patterns[stage_of(name)];
      for (const json& p : list) {
        if (!p.is_string()) throw StageConfigError("keywords of " + name + " must be strings");
        out.push_back(p.get<std::string>());
      }
    }
  }
  config.keywords = KeywordMap(patterns);
  if (auto it = document.find("descriptions"); it != document.end()) {
    if (!it->is_object()) throw StageConfigError("\"descriptions\" must be an object");
    // Pipeline order, independent of key order in the file.
    for (StageLabel stage : kPipelineStages) {
      auto d = it->find(std::string(stage_name(stage)));
      if (d == it->end()) continue;
      if (!d->is_string()) throw StageConfigError("descriptions must be strings");
      config.descriptions.entries.emplace_back(stage, d->get<std::string>());
    }
    for (const auto& [name, value] : it->items()) stage_of(name);
  }
  return config;
}

StageConfig load_stage_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StageConfigError("cannot read stage config " + path.string());
  try {
    return parse_stage_config(json::parse(in));
  } catch (const json::parse_error& e) {
    throw StageConfigError(path.string() + ": " + e.what());
  }
}

StageAssignment classify_file(std::string file, std::string_view text, const KeywordMap& keywords,
                              const std::optional<StageScores>& scores,
                              const ClassifyOptions& options) {
  if (scores) {
    for (const auto& [stage, value] : *scores) {
      if (!std::isfinite(value) || value < 0 || value > 1) throw InvalidScore(stage, value);
    }
  }
  StageAssignment a;
  a.file = std::move(file);
  std::vector<std::string> fragments;
  if (options.strict) fragments = strict_fragments(text);
  for (StageLabel stage : kPipelineStages) {
    std::optional<double> score;
    if (scores) {
      if (auto it = scores->find(stage); it != scores->end()) score = it->second;
    }
    if (score && *score >= options.threshold) {
      a.stages[stage] = {Provenance::Source::Semantic, *score, ""};
      continue;
    }
    std::optional<std::string> hit;
    if (options.strict) {
      for (const std::string& f : fragments) {
        if ((hit = keywords.first_match(stage, f))) break;
      }
    } else {
      hit = keywords.first_match(stage, text);
    }
    if (hit) a.stages[stage] = {Provenance::Source::Keyword, 0, *hit};
  }
  if (a.stages.empty()) a.stages[StageLabel::Unknown] = {};
  return a;
}

std::vector<StageAssignment> mono_label_subset(const std::vector<StageAssignment>& assignments) {
  std::vector<StageAssignment> out;
  for (const auto& a : assignments) {
    if (a.stages.size() == 1 && !a.is_unknown()) out.push_back(a);
  }
  return out;
}

StageMatrix smell_stage_distribution(const std::vector<StageAssignment>& assignments,
                                     const std::vector<Detection>& detections, LabelMode mode) {
  std::map<std::string, const StageAssignment*> by_file;
  for (const auto& a : assignments) by_file[a.file] = &a;
  std::map<std::string, std::set<SmellKind>> kinds_by_file;
  for (const Detection& d : detections) {
    if (!by_file.contains(d.file_path)) throw UnassignedFile(d.file_path);
    kinds_by_file[d.file_path].insert(d.kind);
  }
  const std::vector<StageAssignment> mono =
      mode == LabelMode::Mono ? mono_label_subset(assignments) : std::vector<StageAssignment>{};
  const std::vector<StageAssignment>& counted = mode == LabelMode::Mono ? mono : assignments;

  std::map<StageLabel, std::size_t> files;
  std::map<StageLabel, std::map<SmellKind, std::size_t>> hits;
  for (const auto& a : counted) {
    const auto kinds = kinds_by_file.find(a.file);
    for (const auto& [stage, provenance] : a.stages) {
      ++files[stage];
      if (kinds == kinds_by_file.end()) continue;
      for (SmellKind k : kinds->second) ++hits[stage][k];
    }
  }
  StageMatrix matrix;
  for (StageLabel stage : kAllStageLabels) {
    for (SmellKind k : kAllSmellKinds) {
      const std::size_t n = files[stage];
      matrix[stage][k] =
          n == 0 ? 0.0 : 100.0 * static_cast<double>(hits[stage][k]) / static_cast<double>(n);
    }
  }
  return matrix;
}

ClassifierEvaluation evaluate_classifier(const std::vector<StageAssignment>& predicted,
                                         const std::vector<StageAssignment>& truth) {
  std::map<std::string, const StageAssignment*> truth_by_file;
  for (const auto& t : truth) truth_by_file[t.file] = &t;
  std::set<std::string> predicted_files;
  for (const auto& p : predicted) predicted_files.insert(p.file);
  if (predicted_files.size() != predicted.size() || truth_by_file.size() != truth.size()) {
    throw FileSetMismatch("duplicate file in classifier evaluation");
  }
  for (const auto& p : predicted) {
    if (!truth_by_file.contains(p.file)) throw FileSetMismatch("no truth for " + p.file);
  }
  if (predicted.size() != truth.size()) {
    throw FileSetMismatch("truth has files without predictions");
  }

  ClassifierEvaluation e;
  const double n = static_cast<double>(predicted.size());
  for (StageLabel stage : kPipelineStages) {
    double tp = 0, fp = 0, fn = 0, tn = 0;
    for (const auto& p : predicted) {
      const bool guess = p.has(stage);
      const bool actual = truth_by_file.at(p.file)->has(stage);
      if (guess && actual) ++tp;
      if (guess && !actual) ++fp;
      if (!guess && actual) ++fn;
      if (!guess && !actual) ++tn;
    }
    BinaryMetrics m;
    if (tp + fp + fn == 0) {
      m = {1, 1, 1, 1};
    } else {
      m.precision = tp + fp == 0 ? 0 : tp / (tp + fp);
      m.recall = tp + fn == 0 ? 0 : tp / (tp + fn);
      m.f1 =
          m.precision + m.recall == 0 ? 0 : 2 * m.precision * m.recall / (m.precision + m.recall);
      m.accuracy = n == 0 ? 1 : (tp + tn) / n;
    }
    e.per_stage[stage] = m;
    e.macro.precision += m.precision / kPipelineStages.size();
    e.macro.recall += m.recall / kPipelineStages.size();
    e.macro.f1 += m.f1 / kPipelineStages.size();
    e.macro.accuracy += m.accuracy / kPipelineStages.size();
  }
  return e;
}

}  // namespace smellscan
