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

#include <random>

#include "smellscan/metrics.hpp"
#include "support/oracles.hpp"

namespace smellscan {
namespace {

namespace oracle = smellscan::testing;

Detection detection(const std::string& file, SmellKind kind) {
  Detection d;
  d.file_path = file;
  d.kind = kind;
  return d;
}

std::vector<Detection> repeat(const std::string& file, SmellKind kind, std::size_t n) {
  return std::vector<Detection>(n, detection(file, kind));
}

TEST(CountLoc, SkipsBlankLines) { EXPECT_EQ(count_loc("x=1\n\ny=2\n"), 2u); }

TEST(CountLoc, ExcludesComments) {
  EXPECT_EQ(count_loc("x=1\n# c\n", LocMode::ExcludeComments), 1u);
  EXPECT_EQ(count_loc("x=1\n# c\n", LocMode::PhysicalNonblank), 2u);
}

TEST(CountLoc, WhitespaceOnlyAndMissingNewline) {
  EXPECT_EQ(count_loc(""), 0u);
  EXPECT_EQ(count_loc(" \t \n\r\n"), 0u);
  EXPECT_EQ(count_loc("pass"), 1u);
}

TEST(CountLoc, MixedFixture) {
  // Hand count: lines 1, 3, 5, 6, 8 and 9 hold code; 2 and 7 are comments;
  // 4 and 10 are blank.
  const std::string text =
      "import os\n"
      "# setup\n"
      "x = 1  # trailing\n"
      "\n"
      "def f():\n"
      "    return '''\n"
      "# inside a string\n"
      "'''\n"
      "y = f()\n"
      "   \n";
  EXPECT_EQ(count_loc(text, LocMode::PhysicalNonblank), 8u);
  // The '#' line inside the triple-quoted string is code, not a comment.
  EXPECT_EQ(count_loc(text, LocMode::ExcludeComments), 7u);
}

TEST(CountLoc, IndentedComment) {
  EXPECT_EQ(count_loc("if x:\n    # note\n    pass\n", LocMode::ExcludeComments), 2u);
}

TEST(LocModeNames, RoundTrip) {
  for (LocMode m : {LocMode::PhysicalNonblank, LocMode::ExcludeComments}) {
    EXPECT_EQ(loc_mode_from_name(loc_mode_name(m)), m);
  }
  EXPECT_FALSE(loc_mode_from_name("sloc").has_value());
}

TEST(ProjectMetrics, DensityPerKloc) {
  const ProjectMetrics m =
      project_metrics("p", repeat("a.py", SmellKind::ForElse, 3), {{"a.py", 1500}});
  EXPECT_EQ(m.loc, 1500u);
  EXPECT_EQ(m.counts_by_kind.at(SmellKind::ForElse), 3u);
  EXPECT_DOUBLE_EQ(m.density_per_kloc_by_kind.at(SmellKind::ForElse), 2.0);
  EXPECT_DOUBLE_EQ(m.total_density_per_kloc(), 2.0);
  EXPECT_EQ(m.smelly_files, 1u);
  EXPECT_DOUBLE_EQ(m.per_smelly_file_by_kind.at(SmellKind::ForElse), 3.0);
}

TEST(ProjectMetrics, NoDetections) {
  const ProjectMetrics m = project_metrics("p", {}, {{"a.py", 10}, {"b.py", 20}});
  EXPECT_EQ(m.loc, 30u);
  EXPECT_EQ(m.smelly_files, 0u);
  EXPECT_EQ(m.counts_by_kind.size(), kAllSmellKinds.size());
  for (const auto& [kind, density] : m.density_per_kloc_by_kind) EXPECT_EQ(density, 0);
  EXPECT_TRUE(m.per_smelly_file_by_kind.empty());
  EXPECT_FALSE(m.total_per_smelly_file().has_value());
}

TEST(ProjectMetrics, TwoFiles) {
  std::vector<Detection> d = repeat("a.py", SmellKind::CallStar, 2);
  for (const Detection& x : repeat("b.py", SmellKind::ChainCompare, 3)) d.push_back(x);
  const ProjectMetrics m = project_metrics("p", d, {{"a.py", 400}, {"b.py", 600}});
  EXPECT_DOUBLE_EQ(m.total_density_per_kloc(), 5.0);
  EXPECT_EQ(m.smelly_files, 2u);
  EXPECT_DOUBLE_EQ(*m.total_per_smelly_file(), 2.5);
  const ProjectMetrics a =
      project_metrics("a", repeat("a.py", SmellKind::CallStar, 2), {{"a.py", 400}});
  const ProjectMetrics b =
      project_metrics("b", repeat("b.py", SmellKind::ChainCompare, 3), {{"b.py", 600}});
  EXPECT_EQ(m.total_count(), a.total_count() + b.total_count());
  EXPECT_EQ(m.loc, a.loc + b.loc);
}

TEST(ProjectMetrics, MissingLoc) {
  try {
    project_metrics("p", {detection("gone.py", SmellKind::ForElse)}, {{"a.py", 5}});
    FAIL() << "expected MissingLoc";
  } catch (const MissingLoc& e) {
    EXPECT_EQ(e.path(), "gone.py");
  }
}

TEST(ProjectMetrics, ConcatenationIsAdditive) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> files(1, 6);
  std::uniform_int_distribution<std::size_t> loc(0, 3000);
  std::uniform_int_distribution<std::size_t> hits(0, 4);
  std::uniform_int_distribution<std::size_t> kind(0, kAllSmellKinds.size() - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Detection> merged_detections;
    std::map<std::string, std::size_t> merged_loc;
    std::vector<ProjectMetrics> parts;
    for (int part = 0; part < 2; ++part) {
      std::vector<Detection> detections;
      std::map<std::string, std::size_t> loc_by_file;
      const std::size_t n = files(rng);
      for (std::size_t f = 0; f < n; ++f) {
        const std::string path = "p" + std::to_string(part) + "/f" + std::to_string(f) + ".py";
        loc_by_file[path] = loc(rng) + 1;
        for (std::size_t h = hits(rng); h > 0; --h) {
          detections.push_back(detection(path, kAllSmellKinds[kind(rng)]));
        }
      }
      merged_detections.insert(merged_detections.end(), detections.begin(), detections.end());
      merged_loc.insert(loc_by_file.begin(), loc_by_file.end());
      parts.push_back(project_metrics("part", detections, loc_by_file));
    }
    const ProjectMetrics merged = project_metrics("merged", merged_detections, merged_loc);
    ASSERT_EQ(merged.loc, parts[0].loc + parts[1].loc);
    ASSERT_EQ(merged.smelly_files, parts[0].smelly_files + parts[1].smelly_files);
    for (SmellKind k : kAllSmellKinds) {
      const std::size_t count = parts[0].counts_by_kind.at(k) + parts[1].counts_by_kind.at(k);
      ASSERT_EQ(merged.counts_by_kind.at(k), count);
      ASSERT_EQ(merged.density_per_kloc_by_kind.at(k),
                static_cast<double>(count) * 1000.0 / static_cast<double>(merged.loc));
    }
    ASSERT_EQ(merged.total_density_per_kloc(), static_cast<double>(merged_detections.size()) *
                                                   1000.0 / static_cast<double>(merged.loc));
  }
}

TEST(NormalizationNames, RoundTrip) {
  for (Normalization n : {Normalization::Kloc, Normalization::SmellyFile}) {
    EXPECT_EQ(normalization_from_name(normalization_name(n)), n);
  }
  EXPECT_FALSE(normalization_from_name("loc").has_value());
}

// One project per entry: `scale * (index + 1)` detections of every kind in
// a single file of 1000 lines.
std::vector<ProjectMetrics> uniform_corpus(std::size_t projects, std::size_t scale) {
  std::vector<ProjectMetrics> out;
  for (std::size_t i = 0; i < projects; ++i) {
    std::vector<Detection> d;
    for (SmellKind k : kAllSmellKinds) {
      for (const Detection& x : repeat("m.py", k, scale * (i + 1))) d.push_back(x);
    }
    out.push_back(project_metrics("p" + std::to_string(i), d, {{"m.py", 1000}}));
  }
  return out;
}

TEST(CompareCorpora, IdenticalCorporaFlagNothing) {
  const auto corpus = uniform_corpus(6, 1);
  for (Normalization n : {Normalization::Kloc, Normalization::SmellyFile}) {
    const auto table = compare_corpora(corpus, corpus, n);
    ASSERT_EQ(table.size(), kAllSmellKinds.size() + 1);
    for (const KindComparison& row : table) {
      EXPECT_FALSE(row.significant);
      EXPECT_EQ(row.test.p_value, 1);
      EXPECT_EQ(row.test.rank_biserial, 0);
      EXPECT_EQ(row.mean_a, row.mean_b);
    }
  }
}

TEST(CompareCorpora, TenfoldDensityFlagsEveryKind) {
  const auto dense = uniform_corpus(6, 10);
  const auto sparse = uniform_corpus(6, 1);
  const auto dist = oracle::enumerate_u_distribution(6, 6);
  const double expected_p = oracle::exact_two_sided_p(dist, 36, 6, 6);
  const auto table = compare_corpora(dense, sparse, Normalization::Kloc);
  ASSERT_EQ(table.size(), kAllSmellKinds.size() + 1);
  for (std::size_t i = 0; i < kAllSmellKinds.size(); ++i) {
    EXPECT_EQ(table[i].kind, kAllSmellKinds[i]);
  }
  EXPECT_FALSE(table.back().kind.has_value());
  for (const KindComparison& row : table) {
    EXPECT_TRUE(row.significant);
    EXPECT_TRUE(row.test.exact);
    EXPECT_EQ(row.test.u, 36);
    EXPECT_EQ(row.test.rank_biserial, 1);
    EXPECT_NEAR(row.test.p_value, expected_p, 1e-12);
    EXPECT_DOUBLE_EQ(row.mean_a, 10 * row.mean_b);
  }
}

TEST(CompareCorpora, SingleKindCorpus) {
  std::vector<ProjectMetrics> a;
  std::vector<ProjectMetrics> b;
  for (std::size_t i = 0; i < 4; ++i) {
    a.push_back(project_metrics("a", repeat("x.py", SmellKind::ForElse, i + 1), {{"x.py", 500}}));
    b.push_back(project_metrics("b", repeat("y.py", SmellKind::ForElse, i + 2), {{"y.py", 500}}));
  }
  for (Normalization n : {Normalization::Kloc, Normalization::SmellyFile}) {
    for (const KindComparison& row : compare_corpora(a, b, n)) {
      if (row.kind && *row.kind != SmellKind::ForElse) {
        EXPECT_EQ(row.mean_a, 0);
        EXPECT_EQ(row.mean_b, 0);
        EXPECT_FALSE(row.significant);
      } else {
        EXPECT_GT(row.mean_a, 0);
      }
    }
  }
}

TEST(CompareCorpora, NormalizationsDiffer) {
  // Same counts, different file spread: per-KLOC agrees, per-smelly-file does not.
  std::vector<ProjectMetrics> a;
  std::vector<ProjectMetrics> b;
  for (std::size_t i = 0; i < 5; ++i) {
    a.push_back(
        project_metrics("a", repeat("one.py", SmellKind::CallStar, 4 + i), {{"one.py", 1000}}));
    std::vector<Detection> spread;
    for (std::size_t f = 0; f < 4 + i; ++f) {
      spread.push_back(detection("f" + std::to_string(f) + ".py", SmellKind::CallStar));
    }
    std::map<std::string, std::size_t> loc;
    for (std::size_t f = 0; f < 4 + i; ++f) loc["f" + std::to_string(f) + ".py"] = 0;
    loc["f0.py"] = 1000;
    b.push_back(project_metrics("b", spread, loc));
  }
  const auto kloc = compare_corpora(a, b, Normalization::Kloc);
  const auto per_file = compare_corpora(a, b, Normalization::SmellyFile);
  EXPECT_EQ(kloc.back().mean_a, kloc.back().mean_b);
  EXPECT_DOUBLE_EQ(per_file.back().mean_a, 6.0);
  EXPECT_DOUBLE_EQ(per_file.back().mean_b, 1.0);
  EXPECT_TRUE(per_file.back().significant);
  EXPECT_FALSE(kloc.back().significant);
}

TEST(CompareCorpora, ProjectWithoutSmellsCountsAsZero) {
  const std::vector<ProjectMetrics> a = {project_metrics("clean", {}, {{"c.py", 100}})};
  const std::vector<ProjectMetrics> b = {
      project_metrics("dirty", repeat("d.py", SmellKind::ForElse, 2), {{"d.py", 100}})};
  const auto table = compare_corpora(a, b, Normalization::SmellyFile);
  EXPECT_EQ(table.back().mean_a, 0);
  EXPECT_EQ(table.back().mean_b, 2);
}

TEST(CompareCorpora, RejectsEmptyCorpus) {
  EXPECT_THROW(compare_corpora({}, uniform_corpus(1, 1), Normalization::Kloc), EmptyCorpus);
  EXPECT_THROW(compare_corpora(uniform_corpus(1, 1), {}, Normalization::Kloc), EmptyCorpus);
}

}  // namespace
}  // namespace smellscan
