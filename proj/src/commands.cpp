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

#include "smellscan/commands.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "smellscan/adapter.hpp"
#include "smellscan/scanner.hpp"

namespace smellscan {

using nlohmann::json;

namespace {

class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw CommandError("cannot write " + path);
  file << text;
  if (!file) throw CommandError("cannot write " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Runs `body`, mapping every failure to a message and kExitError.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const SchemaError& e) {
    err << "error: invalid report: " << e.what() << "\n";
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.path1().string() << ": " << e.code().message() << "\n";
  } catch (const ApiRateLimited& e) {
    err << "error: " << e.what() << "; wait and re-run, or use a token with a higher quota\n";
  } catch (const ApiAuthError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

std::vector<ProjectMetrics> load_corpus(const std::vector<std::string>& reports) {
  std::vector<ProjectMetrics> corpus;
  for (const std::string& path : reports)
    corpus.push_back(project_metrics(path, read_report(path)));
  return corpus;
}

std::string row_label(const std::optional<SmellKind>& kind) {
  return kind ? std::string(smell_name(*kind)) : "All";
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

json summary_json(const DescriptiveStats& s) {
  return {{"n", s.n},   {"mean", s.mean},     {"std", s.std}, {"min", s.min},
          {"q1", s.q1}, {"median", s.median}, {"q3", s.q3},   {"max", s.max}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json provenance_json(StageLabel stage, const Provenance& p) {
  json j = {{"stage", std::string(stage_name(stage))}};
  switch (p.source) {
    case Provenance::Source::Semantic:
      j["provenance"] = "semantic";
      j["score"] = p.score;
      break;
    case Provenance::Source::Keyword:
      j["provenance"] = "keyword";
      j["pattern"] = p.pattern;
      break;
    case Provenance::Source::Unknown:
      j["provenance"] = "unknown";
      break;
  }
  return j;
}

json matrix_json(const StageMatrix& matrix) {
  json j = json::object();
  for (const auto& [stage, row] : matrix) {
    json cells = json::object();
    for (const auto& [kind, pct] : row) cells[std::string(smell_name(kind))] = pct;
    j[std::string(stage_name(stage))] = cells;
  }
  return j;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_label_file(const std::string& path) {
  std::istringstream in(read_text(path));
  std::string line;
  std::vector<std::pair<std::string, std::string>> rows;
  std::set<std::string> ids;
  bool header = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw CommandError(path + ":" + std::to_string(line_no) + ": expected id,label");
    }
    std::string id = line.substr(0, comma);
    std::string label = line.substr(comma + 1);
    if (!ids.insert(id).second) {
      throw CommandError(path + ":" + std::to_string(line_no) + ": duplicate id \"" + id + "\"");
    }
    rows.emplace_back(std::move(id), std::move(label));
  }
  return rows;
}

int run_scan(const ScanCommand& cmd, const ToolConfig& config, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    if (cmd.paths.empty()) throw CommandError("scan needs at least one path");
    std::vector<std::filesystem::path> roots(cmd.paths.begin(), cmd.paths.end());
    const ScanReport report = scan_paths(roots, config, cmd.jobs);
    write_output(cmd.output, dump_report(report), out);
    err << "scanned " << report.scanned_files << " files: " << report.detections.size()
        << " detections, " << report.parse_errors.size() << " parse errors\n";
    for (const auto& e : report.parse_errors) err << "  skipped " << e.message << "\n";
    return cmd.fail_on_smell && !report.detections.empty() ? kExitFindings : kExitOk;
  });
}

int run_compare(const CompareCommand& cmd, const ToolConfig& config, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const auto a = load_corpus(cmd.reports_a);
    const auto b = load_corpus(cmd.reports_b);
    const auto table = compare_corpora(a, b, cmd.normalization);

    json rows = json::array();
    for (const auto& r : table) {
      rows.push_back({{"smell", row_label(r.kind)},
                      {"mean_a", r.mean_a},
                      {"mean_b", r.mean_b},
                      {"u", r.test.u},
                      {"p_value", r.test.p_value},
                      {"rank_biserial", r.test.rank_biserial},
                      {"exact", r.test.exact},
                      {"significant", r.significant}});
    }
    json doc = {{"config", to_json(config)},
                {"normalization", std::string(normalization_name(cmd.normalization))},
                {"projects_a", cmd.reports_a},
                {"projects_b", cmd.reports_b},
                {"rows", rows}};
    if (!cmd.json_output.empty()) write_output(cmd.json_output, doc.dump(2) + "\n", out);

    const std::string unit =
        cmd.normalization == Normalization::Kloc ? "per KLOC" : "per smelly file";
    out << "Smell density " << unit << " (a: " << a.size() << " projects, b: " << b.size()
        << " projects)\n";
    out << std::left << std::setw(22) << "Smell" << std::right << std::setw(10) << "mean a"
        << std::setw(10) << "mean b" << std::setw(10) << "U" << std::setw(12) << "p" << std::setw(8)
        << "r" << "\n";
    for (const auto& r : table) {
      out << std::left << std::setw(22) << row_label(r.kind) << std::right << std::setw(10)
          << fixed(r.mean_a, 3) << std::setw(10) << fixed(r.mean_b, 3) << std::setw(10)
          << fixed(r.test.u, 1) << std::setw(12) << fixed(r.test.p_value, 6) << std::setw(8)
          << fixed(r.test.rank_biserial, 3) << (r.significant ? "  *" : "") << "\n";
    }
    out << "* p < " << kSignificance << "\n";
    return kExitOk;
  });
}

int run_classify(const ClassifyCommand& cmd, const ToolConfig& config, const Environment& env,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cmd.paths.empty()) throw CommandError("classify needs at least one path");
    const StageConfig stages = load_stage_config(config.keyword_config);
    std::vector<std::filesystem::path> roots(cmd.paths.begin(), cmd.paths.end());
    const auto files = discover_sources(roots, config.source_glob);

    std::unique_ptr<SemanticAdapter> adapter = std::make_unique<NullAdapter>();
    json warnings = json::array();
    auto warn = [&](const std::string& message) {
      warnings.push_back(message);
      err << "warning: " << message << "\n";
    };
    json model_id = nullptr;
    if (!config.adapter_endpoint.empty()) {
      auto http = std::make_unique<HttpAdapter>(
          config.adapter_endpoint,
          env.transport ? env.transport : make_http_transport(std::chrono::seconds(30)));
      if (auto id = http->health()) {
        model_id = *id;
      } else {
        warn("semantic adapter at " + config.adapter_endpoint + " is unavailable (" +
             http->last_error() + "); using keywords only");
      }
      adapter = std::move(http);
    }

    ClassifyOptions options;
    options.threshold = config.stage_threshold;
    options.strict = config.strict_keywords;
    std::vector<StageAssignment> assignments;
    json listed = json::array();
    for (const auto& file : files) {
      const std::string path = file.generic_string();
      const std::string text = read_text(file.string());
      std::optional<StageScores> scores;
      if (!config.adapter_endpoint.empty()) {
        scores = adapter->score(text, stages.descriptions);
        if (!scores)
          warn("no semantic scores for " + path + " (" + adapter->last_error() +
               "); using keywords only");
      }
      StageAssignment a = classify_file(path, text, stages.keywords, scores, options);
      json labels = json::array();
      for (const auto& [stage, p] : a.stages) labels.push_back(provenance_json(stage, p));
      listed.push_back({{"file", path}, {"stages", labels}});
      assignments.push_back(std::move(a));
    }

    json doc = {{"config", to_json(config)},
                {"model_id", model_id},
                {"prompt", stages.descriptions.prompt()},
                {"assignments", listed},
                {"warnings", warnings}};
    if (!cmd.report.empty()) {
      const ScanReport report = read_report(cmd.report);
      doc["distribution"] = {
          {"multi",
           matrix_json(smell_stage_distribution(assignments, report.detections, LabelMode::Multi))},
          {"mono",
           matrix_json(smell_stage_distribution(assignments, report.detections, LabelMode::Mono))},
          {"mono_files", mono_label_subset(assignments).size()}};
    }
    write_output(cmd.output, doc.dump(2) + "\n", out);
    return kExitOk;
  });
}

int run_mine(const MineCommand& cmd, const ToolConfig& config, const Environment& env,
             std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cmd.output.empty()) throw CommandError("mine needs --output for the manifest");
    CorpusManifest manifest;
    if (!cmd.refilter.empty()) {
      const json stored = json::parse(read_text(cmd.refilter));
      const json& snapshots = stored.at("snapshots");
      if (snapshots.empty()) throw CommandError(cmd.refilter + " has no snapshots");
      const CorpusManifest previous = manifest_from_json(snapshots.back().at("manifest"));
      std::vector<RepoMetadata> repos;
      for (const auto& e : previous.entries) repos.push_back(e.repo);
      manifest = apply_filters(repos, config.filter_criteria);
      manifest.queries = previous.queries;
      manifest.retrieved_at = previous.retrieved_at;
    } else {
      if (cmd.keywords.empty()) throw CommandError("mine needs at least one --keyword");
      if (cmd.token.empty()) {
        throw ApiAuthError("no API token; set GITHUB_TOKEN to a personal access token");
      }
      GitHubClient::Options options;
      options.api_base = cmd.api_base;
      options.token = cmd.token;
      GitHubClient client(env.transport ? env.transport : make_http_transport(), options);
      const std::string retrieved_at = utc_timestamp();
      std::vector<RepoMetadata> repos;
      for (RepoMetadata& r : client.search_repos(cmd.keywords, cmd.top_n, cmd.suffix)) {
        err << "hydrating " << r.full_name << "\n";
        repos.push_back(client.hydrate(std::move(r), config.filter_criteria.ml_libraries));
      }
      manifest = apply_filters(repos, config.filter_criteria);
      manifest.queries = GitHubClient::queries(cmd.keywords, cmd.suffix);
      manifest.retrieved_at = retrieved_at;
    }

    json document = {{"snapshots", json::array()}};
    if (std::filesystem::exists(cmd.output)) {
      document = json::parse(read_text(cmd.output));
      if (!document.contains("snapshots") || !document["snapshots"].is_array()) {
        throw CommandError(cmd.output + " is not a corpus manifest");
      }
    }
    document["snapshots"].push_back({{"config", to_json(config)}, {"manifest", to_json(manifest)}});
    write_output(cmd.output, document.dump(2) + "\n", out);
    err << manifest.entries.size() << " repositories, " << manifest.accepted_count()
        << " accepted\n";
    return kExitOk;
  });
}

int run_kappa(const KappaCommand& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto a = read_label_file(cmd.labels_a);
    const auto b = read_label_file(cmd.labels_b);
    std::map<std::string, std::string> by_id(b.begin(), b.end());
    std::vector<std::string> la;
    std::vector<std::string> lb;
    for (const auto& [id, label] : a) {
      auto it = by_id.find(id);
      if (it == by_id.end()) throw CommandError("id \"" + id + "\" missing from " + cmd.labels_b);
      la.push_back(label);
      lb.push_back(it->second);
      by_id.erase(it);
    }
    if (!by_id.empty()) {
      throw CommandError("id \"" + by_id.begin()->first + "\" missing from " + cmd.labels_a);
    }
    const KappaResult k = cohens_kappa(la, lb);
    if (cmd.json) {
      out << json{{"kappa", k.kappa},
                  {"observed_agreement", k.observed_agreement},
                  {"expected_agreement", k.expected_agreement},
                  {"items", la.size()}}
                 .dump(2)
          << "\n";
    } else {
      out << "kappa " << fixed(k.kappa, 6) << "\npo " << fixed(k.observed_agreement, 6) << "\npe "
          << fixed(k.expected_agreement, 6) << "\n";
    }
    return kExitOk;
  });
}

int run_plot_data(const PlotCommand& cmd, const ToolConfig& config, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    if (cmd.bins == 0) throw CommandError("--bins must be at least 1");
    const auto a = load_corpus(cmd.reports_a);
    const auto b = load_corpus(cmd.reports_b);
    if (a.empty() || b.empty()) throw EmptyCorpus();
    auto value = [&](const ProjectMetrics& m, const std::optional<SmellKind>& kind) {
      if (cmd.normalization == Normalization::Kloc) {
        return kind ? m.density_per_kloc_by_kind.at(*kind) : m.total_density_per_kloc();
      }
      if (m.smelly_files == 0) return 0.0;
      return kind ? m.per_smelly_file_by_kind.at(*kind) : *m.total_per_smelly_file();
    };
    std::vector<std::optional<SmellKind>> rows = {std::nullopt};
    rows.insert(rows.end(), kAllSmellKinds.begin(), kAllSmellKinds.end());
    json series = json::object();
    for (const auto& kind : rows) {
      std::vector<double> sa;
      std::vector<double> sb;
      for (const auto& m : a) sa.push_back(value(m, kind));
      for (const auto& m : b) sb.push_back(value(m, kind));
      const PlotData p = plot_data(sa, sb, cmd.bins);
      series[row_label(kind)] = {{"summary_a", summary_json(p.summary_a)},
                                 {"summary_b", summary_json(p.summary_b)},
                                 {"edges", p.edges},
                                 {"counts_a", p.counts_a},
                                 {"counts_b", p.counts_b}};
    }
    const json doc = {{"config", to_json(config)},
                      {"normalization", std::string(normalization_name(cmd.normalization))},
                      {"bins", cmd.bins},
                      {"projects_a", cmd.reports_a},
                      {"projects_b", cmd.reports_b},
                      {"series", series}};
    write_output(cmd.output, doc.dump(2) + "\n", out);
    return kExitOk;
  });
}

}  // namespace smellscan
