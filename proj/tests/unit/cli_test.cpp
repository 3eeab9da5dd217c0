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

#include <gtest/gtest.h>

#include <sstream>

#include "smellscan/commands.hpp"
#include "smellscan/config.hpp"
#include "smellscan/scanner.hpp"
#include "support/corpus.hpp"
#include "support/fake_github.hpp"

namespace smellscan {
namespace {

namespace fs = std::filesystem;
namespace t = smellscan::testing;
using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

template <typename F>
Outcome capture(F command) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = command(out, err);
  return {code, out.str(), err.str()};
}

Outcome scan(std::vector<std::string> paths, unsigned jobs = 1, bool fail_on_smell = false,
             const ToolConfig& config = {}) {
  ScanCommand cmd;
  cmd.paths = std::move(paths);
  cmd.jobs = jobs;
  cmd.fail_on_smell = fail_on_smell;
  return capture([&](auto& out, auto& err) { return run_scan(cmd, config, out, err); });
}

class Scratch : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = t::scratch_dir("cli"); }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

class ScanDirectory : public Scratch {};

TEST(ScanCommand, GoldenDirectory) {
  const Outcome r = scan({t::data_path("golden").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const ScanReport report = parse_report(json::parse(r.out));
  EXPECT_EQ(report.scanned_files, 18u);
  EXPECT_TRUE(report.parse_errors.empty());
  ASSERT_EQ(report.detections.size(), 9u);
  std::set<SmellKind> kinds;
  for (const Detection& d : report.detections) {
    kinds.insert(d.kind);
    EXPECT_NE(d.file_path.find(".before.py"), std::string::npos) << d.file_path;
  }
  EXPECT_EQ(kinds.size(), 9u);
  EXPECT_EQ(report.loc_by_file.size(), 18u);
  EXPECT_EQ(report.tool_version, kToolVersion);
  EXPECT_EQ(report.config, to_json(ToolConfig{}));
  EXPECT_NE(r.err.find("9 detections"), std::string::npos);
}

TEST(ScanCommand, FailOnSmell) {
  EXPECT_EQ(scan({t::data_path("golden").string()}, 1, true).code, kExitFindings);
  EXPECT_EQ(scan({t::data_path("golden/for_else.after.py").string()}, 1, true).code, kExitOk);
}

TEST(ScanCommand, MissingPath) {
  const Outcome r = scan({"/definitely/not/here"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("/definitely/not/here"), std::string::npos);
  EXPECT_EQ(scan({}).code, kExitError);
}

TEST_F(ScanDirectory, EmptyDirectory) {
  const Outcome r = scan({dir_.string()});
  ASSERT_EQ(r.code, kExitOk);
  const ScanReport report = parse_report(json::parse(r.out));
  EXPECT_EQ(report.scanned_files, 0u);
  EXPECT_TRUE(report.detections.empty());
}

TEST_F(ScanDirectory, MalformedFileIsRecorded) {
  t::write_file(dir_ / "good.py", "x = [1]\n");
  t::write_file(dir_ / "bad.py", "def f(:\n    pass\n");
  t::write_file(dir_ / "notes.txt", "def f(:\n");
  const Outcome r = scan({dir_.string()});
  ASSERT_EQ(r.code, kExitOk);
  const ScanReport report = parse_report(json::parse(r.out));
  EXPECT_EQ(report.scanned_files, 2u);
  ASSERT_EQ(report.parse_errors.size(), 1u);
  EXPECT_EQ(report.parse_errors[0].path, (dir_ / "bad.py").generic_string());
  EXPECT_FALSE(report.parse_errors[0].message.empty());
  EXPECT_EQ(report.loc_by_file.size(), 1u);
  EXPECT_NE(r.err.find("skipped"), std::string::npos);
}

TEST_F(ScanDirectory, OutputFileAndLocModes) {
  t::write_file(dir_ / "a.py", "# header\nx = 1\n\n# note\ny = 2\n");
  ScanCommand cmd;
  cmd.paths = {dir_.string()};
  cmd.output = path("report.json");
  ToolConfig config;
  std::ostringstream out, err;
  ASSERT_EQ(run_scan(cmd, config, out, err), kExitOk);
  EXPECT_TRUE(out.str().empty());
  const ScanReport physical = read_report(cmd.output);
  EXPECT_EQ(physical.loc_by_file.begin()->second, 4u);
  config.loc_mode = LocMode::ExcludeComments;
  ASSERT_EQ(run_scan(cmd, config, out, err), kExitOk);
  const ScanReport code_only = read_report(cmd.output);
  EXPECT_EQ(code_only.loc_by_file.begin()->second, 2u);
  EXPECT_EQ(code_only.config["loc_mode"], "exclude-comments");
}

TEST_F(ScanDirectory, DisabledSmellsAreNotReported) {
  ToolConfig config = config_from_json({{"enabled_smells", {"For Else"}}});
  const Outcome r = scan({t::data_path("golden").string()}, 1, false, config);
  const ScanReport report = parse_report(json::parse(r.out));
  ASSERT_EQ(report.detections.size(), 1u);
  EXPECT_EQ(report.detections[0].kind, SmellKind::ForElse);
}

TEST_F(ScanDirectory, ParallelScanIsByteIdentical) {
  t::write_synthetic_corpus(dir_, 500, 7);
  const Outcome serial = scan({dir_.string()}, 1);
  const Outcome parallel = scan({dir_.string()}, 8);
  ASSERT_EQ(serial.code, kExitOk);
  EXPECT_EQ(serial.out, parallel.out);
  const ScanReport report = parse_report(json::parse(serial.out));
  EXPECT_EQ(report.scanned_files, 500u);
  EXPECT_EQ(report.parse_errors.size(), 10u);
  EXPECT_GT(report.detections.size(), 500u);
}

TEST(Discovery, SortedAndFiltered) {
  const auto files = discover_sources({t::data_path("golden")}, "*.after.py");
  ASSERT_EQ(files.size(), 9u);
  EXPECT_TRUE(std::is_sorted(files.begin(), files.end()));
  const auto single = discover_sources({t::data_path("golden/call_star.before.py")}, "*.txt");
  EXPECT_EQ(single.size(), 1u);
}

// Report with `per_kind` detections of every kind in one 1000-line file.
void write_project(const fs::path& path, std::size_t per_kind, std::size_t files = 1) {
  ScanReport r;
  r.scanned_files = files;
  for (std::size_t f = 0; f < files; ++f)
    r.loc_by_file["f" + std::to_string(f) + ".py"] = 1000 / files;
  for (SmellKind k : kAllSmellKinds) {
    for (std::size_t i = 0; i < per_kind; ++i) {
      Detection d;
      d.file_path = "f" + std::to_string(i % files) + ".py";
      d.kind = k;
      d.ranges = {SourceRange{1, 0, 1, 1}};
      r.detections.push_back(d);
    }
  }
  save_report(r, path);
}

class CompareReports : public Scratch {
 protected:
  void SetUp() override {
    Scratch::SetUp();
    for (std::size_t i = 0; i < 6; ++i) {
      dense_.push_back(path("dense" + std::to_string(i) + ".json"));
      sparse_.push_back(path("sparse" + std::to_string(i) + ".json"));
      write_project(dense_.back(), 10 * (i + 1), 1);
      write_project(sparse_.back(), i + 1, 1 + i % 3);
    }
  }

  Outcome compare(const std::vector<std::string>& a, const std::vector<std::string>& b,
                  Normalization n, const std::string& json_out = "") {
    CompareCommand cmd;
    cmd.reports_a = a;
    cmd.reports_b = b;
    cmd.normalization = n;
    cmd.json_output = json_out;
    return capture([&](auto& out, auto& err) { return run_compare(cmd, ToolConfig{}, out, err); });
  }

  std::vector<std::string> dense_;
  std::vector<std::string> sparse_;
};

TEST_F(CompareReports, IdenticalInputsFlagNothing) {
  const Outcome r = compare(sparse_, sparse_, Normalization::Kloc, path("cmp.json"));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(t::read_file(path("cmp.json")));
  ASSERT_EQ(doc["rows"].size(), 10u);
  for (const json& row : doc["rows"]) EXPECT_FALSE(row["significant"].get<bool>());
  EXPECT_EQ(r.out.find("  *\n"), std::string::npos);
}

TEST_F(CompareReports, TenfoldDensityFlagsEveryRow) {
  const Outcome r = compare(dense_, sparse_, Normalization::Kloc, path("cmp.json"));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(t::read_file(path("cmp.json")));
  EXPECT_EQ(doc["normalization"], "kloc");
  EXPECT_EQ(doc["rows"].back()["smell"], "All");
  for (const json& row : doc["rows"]) {
    EXPECT_TRUE(row["significant"].get<bool>()) << row.dump();
    EXPECT_EQ(row["rank_biserial"], 1.0);
  }
  EXPECT_TRUE(doc.contains("config"));
  EXPECT_NE(r.out.find("per KLOC"), std::string::npos);
  EXPECT_NE(r.out.find("List Comprehension"), std::string::npos);
}

TEST_F(CompareReports, NormalizationsGiveDistinctTables) {
  const Outcome kloc = compare(dense_, sparse_, Normalization::Kloc, path("kloc.json"));
  const Outcome file = compare(dense_, sparse_, Normalization::SmellyFile, path("file.json"));
  ASSERT_EQ(file.code, kExitOk) << file.err;
  EXPECT_NE(kloc.out, file.out);
  EXPECT_NE(file.out.find("per smelly file"), std::string::npos);
  const json a = json::parse(t::read_file(path("kloc.json")));
  const json b = json::parse(t::read_file(path("file.json")));
  EXPECT_NE(a["rows"][0]["mean_b"], b["rows"][0]["mean_b"]);
}

TEST_F(CompareReports, BadReport) {
  t::write_file(path("bad.json"), R"({"tool_version": "0.3.0"})");
  const Outcome r = compare({path("bad.json")}, sparse_, Normalization::Kloc);
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("scanned_files"), std::string::npos);
}

TEST_F(CompareReports, PlotData) {
  PlotCommand cmd;
  cmd.reports_a = dense_;
  cmd.reports_b = sparse_;
  cmd.bins = 4;
  const Outcome r =
      capture([&](auto& out, auto& err) { return run_plot_data(cmd, ToolConfig{}, out, err); });
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  ASSERT_EQ(doc["series"].size(), 10u);
  for (const auto& [name, s] : doc["series"].items()) {
    EXPECT_EQ(s["edges"].size(), 5u);
    std::size_t total = 0;
    for (const json& c : s["counts_a"]) total += c.get<std::size_t>();
    EXPECT_EQ(total, 6u) << name;
    EXPECT_EQ(s["summary_a"]["n"], 6);
  }
  cmd.bins = 0;
  EXPECT_EQ(capture([&](auto& out, auto& err) {
              return run_plot_data(cmd, ToolConfig{}, out, err);
            }).code,
            kExitError);
}

class KappaFiles : public Scratch {
 protected:
  Outcome kappa(const std::string& a, const std::string& b, bool as_json = false) {
    t::write_file(path("a.csv"), a);
    t::write_file(path("b.csv"), b);
    KappaCommand cmd{path("a.csv"), path("b.csv"), as_json};
    return capture([&](auto& out, auto& err) { return run_kappa(cmd, out, err); });
  }
};

TEST_F(KappaFiles, Identical) {
  const Outcome r = kappa("id,label\n1,ml\n2,non-ml\n3,ml\n", "id,label\n3,ml\n1,ml\n2,non-ml\n");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("kappa 1.000000"), std::string::npos);
}

TEST_F(KappaFiles, Crossed) {
  const Outcome r = kappa("id,label\n1,A\n2,B\n3,A\n4,B\n", "id,label\n1,A\n2,A\n3,B\n4,B\n", true);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_DOUBLE_EQ(doc["kappa"].get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(doc["observed_agreement"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(doc["expected_agreement"].get<double>(), 0.5);
  EXPECT_EQ(doc["items"], 4);
}

TEST_F(KappaFiles, MissingIdIsNamed) {
  const Outcome r = kappa("id,label\n1,A\nrepo-42,B\n", "id,label\n1,A\n");
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("repo-42"), std::string::npos);
  const Outcome other = kappa("id,label\n1,A\n", "id,label\n1,A\nextra-7,B\n");
  EXPECT_NE(other.err.find("extra-7"), std::string::npos);
}

TEST_F(KappaFiles, MalformedRows) {
  EXPECT_EQ(kappa("id,label\n1\n", "id,label\n1,A\n").code, kExitError);
  EXPECT_EQ(kappa("id,label\n1,A\n1,B\n", "id,label\n1,A\n").code, kExitError);
}

class ClassifyFiles : public Scratch {
 protected:
  void SetUp() override {
    Scratch::SetUp();
    fs::create_directories(dir_ / "src");
    t::write_file(dir_ / "src/load.py",
                  "from sklearn.datasets import load_iris\nX, y = load_iris(return_X_y=True)\n");
    t::write_file(dir_ / "src/train.py",
                  "for epoch in range(3):\n    optimizer.step()\nresult = []\nfor x in X:\n"
                  "    result.append(x)\n");
    t::write_file(dir_ / "src/util.py", "def add(a, b):\n    return a + b\n");
  }

  Outcome classify(const ToolConfig& config, const std::string& report = "") {
    ClassifyCommand cmd;
    cmd.paths = {(dir_ / "src").string()};
    cmd.report = report;
    Environment env;
    return capture([&](auto& out, auto& err) { return run_classify(cmd, config, env, out, err); });
  }

  static std::map<std::string, std::set<std::string>> stages_by_file(const json& doc) {
    std::map<std::string, std::set<std::string>> out;
    for (const json& a : doc["assignments"]) {
      const std::string file = fs::path(a["file"].get<std::string>()).filename().string();
      for (const json& s : a["stages"]) out[file].insert(s["stage"].get<std::string>());
    }
    return out;
  }
};

TEST_F(ClassifyFiles, KeywordOnly) {
  const Outcome r = classify(ToolConfig{});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_TRUE(doc["model_id"].is_null());
  EXPECT_TRUE(doc["warnings"].empty());
  EXPECT_EQ(doc["prompt"].get<std::string>().rfind("This code is about:, Data Collection: ", 0),
            0u);
  const auto stages = stages_by_file(doc);
  EXPECT_EQ(stages.at("load.py"), std::set<std::string>{"Data Collection"});
  EXPECT_EQ(stages.at("train.py"), std::set<std::string>{"Model Training"});
  EXPECT_EQ(stages.at("util.py"), std::set<std::string>{"Unknown"});
  EXPECT_EQ(doc["assignments"][0]["stages"][0]["provenance"], "keyword");
  EXPECT_EQ(doc["assignments"][0]["stages"][0]["pattern"], "sklearn.datasets");
}

TEST_F(ClassifyFiles, StoppedAdapterDegradesToKeywords) {
  const json keyword_only = json::parse(classify(ToolConfig{}).out);
  t::FakeServer probe;
  probe.start();
  ToolConfig config;
  config.adapter_endpoint = probe.url();
  probe.stop();
  const Outcome r = classify(config);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["assignments"], keyword_only["assignments"]);
  EXPECT_FALSE(doc["warnings"].empty());
  EXPECT_NE(r.err.find("keywords only"), std::string::npos);
}

TEST_F(ClassifyFiles, LiveAdapterAndDistributions) {
  t::FakeServer adapter;
  adapter.routes().Post("/classify", [](const httplib::Request& req, httplib::Response& res) {
    const json body = json::parse(req.body);
    const bool training =
        body["file_text"].get<std::string>().find("optimizer") != std::string::npos;
    json scores = json::object();
    for (const json& s : body["stages"]) {
      scores[s["name"].get<std::string>()] =
          training && s["name"] == "Model Training" ? 0.96 : 0.02;
    }
    res.set_content(json{{"scores", scores}, {"model_id", "fake-nli"}}.dump(), "application/json");
  });
  adapter.routes().Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"model_id": "fake-nli"})", "application/json");
  });
  adapter.start();

  ScanCommand scan_cmd;
  scan_cmd.paths = {(dir_ / "src").string()};
  scan_cmd.output = path("scan.json");
  std::ostringstream sink;
  ASSERT_EQ(run_scan(scan_cmd, ToolConfig{}, sink, sink), kExitOk);

  ToolConfig config;
  config.adapter_endpoint = adapter.url();
  const Outcome r = classify(config, path("scan.json"));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["model_id"], "fake-nli");
  EXPECT_TRUE(doc["warnings"].empty());
  for (const json& a : doc["assignments"]) {
    if (a["file"].get<std::string>().find("train.py") == std::string::npos) continue;
    EXPECT_EQ(a["stages"][0]["provenance"], "semantic");
    EXPECT_EQ(a["stages"][0]["score"], 0.96);
  }
  const json& multi = doc["distribution"]["multi"];
  EXPECT_EQ(multi["Model Training"]["List Comprehension"], 100.0);
  EXPECT_EQ(multi["Data Collection"]["List Comprehension"], 0.0);
  EXPECT_EQ(doc["distribution"]["mono"], multi);
  EXPECT_EQ(doc["distribution"]["mono_files"], 2);
}

class MineCorpus : public Scratch {
 protected:
  void SetUp() override {
    Scratch::SetUp();
    t::FakeRepo ml;
    ml.files = {{"a.py", "import torch\n"}, {"b.py", ""}, {"c.py", ""}, {"d.py", ""}, {"e.py", ""}};
    t::FakeRepo plain = ml;
    plain.files["a.py"] = "import socket\n";
    t::FakeRepo tiny;
    tiny.files = {{"a.py", "import keras\n"}};
    api_.repos = {{"o/ml", ml}, {"o/plain", plain}, {"o/tiny", tiny}};
    api_.search["vision machine learning"] = {"o/ml", "o/tiny"};
    api_.search["nlp machine learning"] = {"o/plain", "o/ml"};
  }

  Outcome mine(const ToolConfig& config, const std::string& refilter = "",
               const std::string& token = "test-token") {
    MineCommand cmd;
    cmd.keywords = {"vision", "nlp"};
    cmd.suffix = "machine learning";
    cmd.top_n = 5;
    cmd.api_base = api_.url();
    cmd.token = token;
    cmd.output = path("manifest.json");
    cmd.refilter = refilter;
    Environment env;
    return capture([&](auto& out, auto& err) { return run_mine(cmd, config, env, out, err); });
  }

  t::FakeGitHub api_;
};

TEST_F(MineCorpus, RecordsAllCriteria) {
  const Outcome r = mine(ToolConfig{});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(t::read_file(path("manifest.json")));
  ASSERT_EQ(doc["snapshots"].size(), 1u);
  const CorpusManifest m = manifest_from_json(doc["snapshots"][0]["manifest"]);
  EXPECT_EQ(m.queries,
            (std::vector<std::string>{"vision machine learning", "nlp machine learning"}));
  EXPECT_FALSE(m.retrieved_at.empty());
  ASSERT_EQ(m.entries.size(), 3u);
  for (const auto& e : m.entries) EXPECT_EQ(e.criteria.size(), 6u);
  EXPECT_TRUE(m.entries[0].accepted);
  EXPECT_EQ(m.entries[1].repo.full_name, "o/tiny");
  EXPECT_EQ(m.entries[1].rejection_reasons, std::vector<std::string>{"C3"});
  EXPECT_EQ(m.entries[2].rejection_reasons, std::vector<std::string>{"C6"});
  EXPECT_EQ(doc["snapshots"][0]["config"], to_json(ToolConfig{}));
}

TEST_F(MineCorpus, RerunAppendsAndRefilterInverts) {
  ASSERT_EQ(mine(ToolConfig{}).code, kExitOk);
  ASSERT_EQ(mine(ToolConfig{}).code, kExitOk);
  ToolConfig non_ml;
  non_ml.filter_criteria.ml_imports = MlImports::Forbid;
  fs::copy_file(path("manifest.json"), path("before.json"));
  api_.stop();
  const Outcome r = mine(non_ml, path("manifest.json"), "");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(t::read_file(path("manifest.json")));
  ASSERT_EQ(doc["snapshots"].size(), 3u);
  const CorpusManifest m = manifest_from_json(doc["snapshots"][2]["manifest"]);
  EXPECT_EQ(m.entries[0].rejection_reasons, std::vector<std::string>{"C6-inverted"});
  EXPECT_TRUE(m.entries[2].accepted);
  EXPECT_EQ(doc["snapshots"][2]["config"]["filter_criteria"]["ml_imports"], "forbid");
}

TEST_F(MineCorpus, ZeroResults) {
  api_.search.clear();
  ASSERT_EQ(mine(ToolConfig{}).code, kExitOk);
  const json doc = json::parse(t::read_file(path("manifest.json")));
  EXPECT_TRUE(manifest_from_json(doc["snapshots"][0]["manifest"]).entries.empty());
}

TEST_F(MineCorpus, MissingTokenAndBadToken) {
  const Outcome none = mine(ToolConfig{}, "", "");
  EXPECT_EQ(none.code, kExitError);
  EXPECT_NE(none.err.find("GITHUB_TOKEN"), std::string::npos);
  const Outcome bad = mine(ToolConfig{}, "", "wrong");
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_NE(bad.err.find("401"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("manifest.json")));
}

TEST_F(MineCorpus, RateLimitAdvice) {
  api_.rate_limited = 100;
  api_.rate_limit_headers = {{"Retry-After", "1"}};
  const Outcome r = mine(ToolConfig{});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("wait and re-run"), std::string::npos);
}

TEST(ToolConfigJson, RoundTripAndUnknownKeys) {
  ToolConfig c;
  c.stage_threshold = 0.75;
  c.loc_mode = LocMode::ExcludeComments;
  c.adapter_endpoint = "http://127.0.0.1:9";
  c.filter_criteria.min_stars = 4;
  const ToolConfig back = config_from_json(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
  EXPECT_THROW(config_from_json({{"treshold", 0.5}}), ConfigError);
  EXPECT_THROW(config_from_json({{"enabled_smells", {"Walrus"}}}), ConfigError);
  EXPECT_THROW(config_from_json({{"stage_threshold", 0.0}}), ConfigError);
  EXPECT_THROW(config_from_json({{"loc_mode", "sloc"}}), ConfigError);
}

}  // namespace
}  // namespace smellscan
