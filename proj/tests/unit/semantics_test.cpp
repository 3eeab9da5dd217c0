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

#include <set>

#include "support/diffexec.hpp"

namespace smellscan {
namespace {

using testing::data_path;

TEST(DifferentialExecution, EveryRewriteBehavesLikeTheOriginal) {
  if (std::string(SMELLSCAN_PYTHON).empty()) GTEST_SKIP() << "no Python interpreter";
  const auto outcome = testing::run_diffexec(data_path("diffexec"), SMELLSCAN_PYTHON,
                                             testing::support_path("diffexec.py"));
  EXPECT_GE(outcome.snippets, 30u);
  EXPECT_GT(outcome.pairs, outcome.snippets);
  for (const auto& f : outcome.failures) ADD_FAILURE() << f.name << ": " << f.detail;
}

TEST(DifferentialExecution, CorpusCoversEveryKindWithPositiveAndNegativeCases) {
  std::set<SmellKind> positive;
  std::set<SmellKind> negative;
  for (const auto& s : testing::load_snippets(data_path("diffexec"))) {
    for (const auto& [kind, count] : s.expected) (count > 0 ? positive : negative).insert(kind);
  }
  for (SmellKind kind : kAllSmellKinds) {
    EXPECT_TRUE(positive.contains(kind)) << smell_name(kind);
    EXPECT_TRUE(negative.contains(kind)) << smell_name(kind);
  }
}

}  // namespace
}  // namespace smellscan
