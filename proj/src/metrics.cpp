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

#include "smellscan/metrics.hpp"

#include <numeric>
#include <set>

#include "smellscan/tokenizer.hpp"

namespace smellscan {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\f' || c == '\r' || c == '\v'; }

// Lines 2.. of every string token spanning several lines.
std::set<int> string_continuation_lines(std::string_view text) {
  std::set<int> lines;
  try {
    const LineIndex index(text);
    for (const Token& t : tokenize(text, index, "<loc>")) {
      if (t.type != TokenType::String) continue;
      for (int l = t.start.line + 1; l <= t.stop.line; ++l) lines.insert(l);
    }
  } catch (const ParseError&) {
    // Untokenizable text counts every '#' line as a comment.
  }
  return lines;
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

std::string_view loc_mode_name(LocMode mode) {
  return mode == LocMode::PhysicalNonblank ? "physical-nonblank" : "exclude-comments";
}

std::optional<LocMode> loc_mode_from_name(std::string_view name) {
  if (name == "physical-nonblank") return LocMode::PhysicalNonblank;
  if (name == "exclude-comments") return LocMode::ExcludeComments;
  return std::nullopt;
}

std::size_t count_loc(std::string_view text, LocMode mode) {
  std::set<int> in_string;
  if (mode == LocMode::ExcludeComments && text.find('#') != std::string_view::npos) {
    in_string = string_continuation_lines(text);
  }
  std::size_t count = 0;
  int line = 1;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::size_t i = start;
    while (i < end && is_space(text[i])) ++i;
    if (i < end) {
      const bool comment =
          mode == LocMode::ExcludeComments && text[i] == '#' && !in_string.contains(line);
      if (!comment) ++count;
    }
    start = end + 1;
    ++line;
  }
  return count;
}

std::size_t ProjectMetrics::total_count() const {
  std::size_t total = 0;
  for (const auto& [kind, count] : counts_by_kind) total += count;
  return total;
}

double ProjectMetrics::total_density_per_kloc() const {
  return loc == 0 ? 0.0 : static_cast<double>(total_count()) * 1000.0 / static_cast<double>(loc);
}

std::optional<double> ProjectMetrics::total_per_smelly_file() const {
  if (smelly_files == 0) return std::nullopt;
  return static_cast<double>(total_count()) / static_cast<double>(smelly_files);
}

ProjectMetrics project_metrics(std::string project_id, const std::vector<Detection>& detections,
                               const std::map<std::string, std::size_t>& loc_by_file) {
  ProjectMetrics m;
  m.project_id = std::move(project_id);
  for (const auto& [path, loc] : loc_by_file) m.loc += loc;
  for (SmellKind k : kAllSmellKinds) m.counts_by_kind[k] = 0;
  std::set<std::string> smelly;
  for (const Detection& d : detections) {
    if (!loc_by_file.contains(d.file_path)) throw MissingLoc(d.file_path);
    ++m.counts_by_kind[d.kind];
    smelly.insert(d.file_path);
  }
  m.smelly_files = smelly.size();
  for (const auto& [kind, count] : m.counts_by_kind) {
    const double c = static_cast<double>(count);
    m.density_per_kloc_by_kind[kind] = m.loc == 0 ? 0.0 : c * 1000.0 / static_cast<double>(m.loc);
    if (m.smelly_files > 0) {
      m.per_smelly_file_by_kind[kind] = c / static_cast<double>(m.smelly_files);
    }
  }
  return m;
}

ProjectMetrics project_metrics(std::string project_id, const ScanReport& report) {
  return project_metrics(std::move(project_id), report.detections, report.loc_by_file);
}

std::string_view normalization_name(Normalization n) {
  return n == Normalization::Kloc ? "kloc" : "smelly-file";
}

std::optional<Normalization> normalization_from_name(std::string_view name) {
  if (name == "kloc") return Normalization::Kloc;
  if (name == "smelly-file") return Normalization::SmellyFile;
  return std::nullopt;
}

std::vector<KindComparison> compare_corpora(const std::vector<ProjectMetrics>& a,
                                            const std::vector<ProjectMetrics>& b,
                                            Normalization normalization) {
  if (a.empty() || b.empty()) throw EmptyCorpus();
  auto value = [&](const ProjectMetrics& m, std::optional<SmellKind> kind) {
    if (normalization == Normalization::Kloc) {
      return kind ? m.density_per_kloc_by_kind.at(*kind) : m.total_density_per_kloc();
    }
    if (m.smelly_files == 0) return 0.0;
    return kind ? m.per_smelly_file_by_kind.at(*kind) : *m.total_per_smelly_file();
  };
  auto sample = [&](const std::vector<ProjectMetrics>& corpus, std::optional<SmellKind> kind) {
    std::vector<double> out;
    for (const auto& m : corpus) out.push_back(value(m, kind));
    return out;
  };
  std::vector<std::optional<SmellKind>> rows(kAllSmellKinds.begin(), kAllSmellKinds.end());
  rows.push_back(std::nullopt);
  std::vector<KindComparison> table;
  for (const auto& kind : rows) {
    const std::vector<double> sa = sample(a, kind);
    const std::vector<double> sb = sample(b, kind);
    KindComparison row;
    row.kind = kind;
    row.mean_a = mean_of(sa);
    row.mean_b = mean_of(sb);
    row.test = mann_whitney_u(sa, sb);
    row.significant = row.test.p_value < kSignificance;
    table.push_back(row);
  }
  return table;
}

}  // namespace smellscan
