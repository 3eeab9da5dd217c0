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

// smellscan: performance smell scanner and corpus statistics.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "smellscan/commands.hpp"

namespace {

using smellscan::Normalization;

const std::map<std::string, Normalization> kNormalizations = {
    {"kloc", Normalization::Kloc}, {"smelly-file", Normalization::SmellyFile}};

std::string env_or_empty(const char* name) {
  const char* v = std::getenv(name);
  return v == nullptr ? std::string() : std::string(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detects Python performance smells and compares smell densities across corpora."};
  app.set_version_flag("--version", std::string(smellscan::kToolVersion));
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);

  smellscan::ScanCommand scan;
  auto* scan_cmd = app.add_subcommand("scan", "Scan files or directories and write a report");
  scan_cmd->add_option("paths", scan.paths, "Files or directories")->required();
  scan_cmd->add_option("-o,--output", scan.output, "Report file (default: stdout)");
  scan_cmd->add_option("-j,--jobs", scan.jobs, "Worker threads (0: one per core)");
  scan_cmd->add_flag("--fail-on-smell", scan.fail_on_smell, "Exit with 1 when anything is found");

  smellscan::CompareCommand compare;
  auto* compare_cmd = app.add_subcommand("compare", "Compare smell densities of two corpora");
  compare_cmd->add_option("--a", compare.reports_a, "Reports of the first corpus, one per project")
      ->required();
  compare_cmd->add_option("--b", compare.reports_b, "Reports of the second corpus")->required();
  compare_cmd->add_option("--normalize", compare.normalization, "kloc or smelly-file")
      ->transform(CLI::CheckedTransformer(kNormalizations, CLI::ignore_case));
  compare_cmd->add_option("--json", compare.json_output, "Also write the table as JSON");

  smellscan::ClassifyCommand classify;
  std::string adapter;
  double threshold = -1;
  bool strict = false;
  std::string keywords;
  auto* classify_cmd = app.add_subcommand("classify", "Assign ML pipeline stages to files");
  classify_cmd->add_option("paths", classify.paths, "Files or directories")->required();
  classify_cmd->add_option("--report", classify.report, "Scan report for stage distributions")
      ->check(CLI::ExistingFile);
  classify_cmd->add_option("--adapter", adapter,
                           "Semantic adapter URL, e.g. http://127.0.0.1:8000");
  classify_cmd->add_option("--threshold", threshold, "Semantic score threshold")
      ->check(CLI::Range(0.0, 1.0));
  classify_cmd->add_option("--keywords", keywords, "Stage keyword configuration")
      ->check(CLI::ExistingFile);
  classify_cmd->add_flag("--strict", strict, "Match keywords only in imports and calls");
  classify_cmd->add_option("-o,--output", classify.output, "Output file (default: stdout)");

  smellscan::MineCommand mine;
  std::string ml_imports;
  auto* mine_cmd = app.add_subcommand("mine", "Search repositories and apply sampling criteria");
  mine_cmd->add_option("--keyword", mine.keywords, "Search keyword, repeatable");
  mine_cmd->add_option("--suffix", mine.suffix, "Appended to every keyword query");
  mine_cmd->add_option("--top-n", mine.top_n, "Results kept per query")->check(CLI::PositiveNumber);
  mine_cmd->add_option("--api-base", mine.api_base, "API root URL");
  mine_cmd->add_option("--ml-imports", ml_imports, "require, forbid or ignore")
      ->check(CLI::IsMember({"require", "forbid", "ignore"}));
  mine_cmd
      ->add_option("--refilter", mine.refilter,
                   "Re-apply criteria to the newest snapshot of this manifest")
      ->check(CLI::ExistingFile);
  mine_cmd->add_option("-o,--output", mine.output, "Manifest file; runs append snapshots")
      ->required();

  smellscan::KappaCommand kappa;
  auto* kappa_cmd = app.add_subcommand("kappa", "Cohen's kappa of two id,label files");
  kappa_cmd->add_option("labels_a", kappa.labels_a)->required()->check(CLI::ExistingFile);
  kappa_cmd->add_option("labels_b", kappa.labels_b)->required()->check(CLI::ExistingFile);
  kappa_cmd->add_flag("--json", kappa.json, "Print JSON");

  smellscan::PlotCommand plot;
  auto* plot_cmd = app.add_subcommand("plot-data", "Box-plot summaries and histograms as JSON");
  plot_cmd->add_option("--a", plot.reports_a, "Reports of the first corpus")->required();
  plot_cmd->add_option("--b", plot.reports_b, "Reports of the second corpus")->required();
  plot_cmd->add_option("--normalize", plot.normalization, "kloc or smelly-file")
      ->transform(CLI::CheckedTransformer(kNormalizations, CLI::ignore_case));
  plot_cmd->add_option("--bins", plot.bins, "Histogram bins")->check(CLI::PositiveNumber);
  plot_cmd->add_option("-o,--output", plot.output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : smellscan::kExitError;
  }

  smellscan::ToolConfig config;
  try {
    if (!config_path.empty()) config = smellscan::load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return smellscan::kExitError;
  }
  if (!adapter.empty()) config.adapter_endpoint = adapter;
  if (threshold >= 0) {
    if (threshold == 0) {
      std::cerr << "error: --threshold must be greater than 0\n";
      return smellscan::kExitError;
    }
    config.stage_threshold = threshold;
  }
  if (strict) config.strict_keywords = true;
  if (!keywords.empty()) config.keyword_config = keywords;
  if (!ml_imports.empty()) {
    config.filter_criteria.ml_imports = *smellscan::ml_imports_from_name(ml_imports);
  }

  smellscan::Environment env;
  if (*scan_cmd) return smellscan::run_scan(scan, config, std::cout, std::cerr);
  if (*compare_cmd) return smellscan::run_compare(compare, config, std::cout, std::cerr);
  if (*classify_cmd) return smellscan::run_classify(classify, config, env, std::cout, std::cerr);
  if (*mine_cmd) {
    mine.token = env_or_empty("GITHUB_TOKEN");
    return smellscan::run_mine(mine, config, env, std::cout, std::cerr);
  }
  if (*kappa_cmd) return smellscan::run_kappa(kappa, std::cout, std::cerr);
  return smellscan::run_plot_data(plot, config, std::cout, std::cerr);
}
