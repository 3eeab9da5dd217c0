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

// Repository metadata exercising each filter criterion, with the expected
// rejection reasons.

#ifndef SMELLSCAN_TESTS_SUPPORT_FILTER_FIXTURE_HPP_
#define SMELLSCAN_TESTS_SUPPORT_FILTER_FIXTURE_HPP_

#include <string>
#include <vector>

#include "smellscan/miner.hpp"

namespace smellscan::testing {

inline Date date(int y, unsigned m, unsigned d) {
  return std::chrono::year{y} / std::chrono::month{m} / std::chrono::day{d};
}

// Passes every default criterion: not a fork, 1 star, 1 fork, 6 files,
// 60 days of history ending in 2024, imports an ML library.
inline RepoMetadata passing(const std::string& name) {
  RepoMetadata r;
  r.full_name = name;
  r.stars = 1;
  r.forks = 1;
  r.source_file_count = 6;
  r.first_commit = date(2024, 1, 1);
  r.last_commit = date(2024, 3, 1);
  r.imports_ml_libs = true;
  return r;
}

struct FilterCase {
  RepoMetadata repo;
  std::vector<std::string> reasons;
};

inline std::vector<FilterCase> filter_fixture() {
  std::vector<FilterCase> cases;
  auto add = [&](const std::string& name, auto edit, std::vector<std::string> reasons) {
    RepoMetadata r = passing(name);
    edit(r);
    cases.push_back({r, std::move(reasons)});
  };
  add("r01/base", [](RepoMetadata&) {}, {});
  add("r02/fork",
      [](RepoMetadata& r) {
        r.is_fork = true;
        r.stars = 100;
      },
      {"C1"});
  add("r03/no-stars", [](RepoMetadata& r) { r.stars = 0; }, {"C2"});
  add("r04/no-forks", [](RepoMetadata& r) { r.forks = 0; }, {"C2"});
  add("r05/four-files", [](RepoMetadata& r) { r.source_file_count = 4; }, {"C3"});
  // 2024 is a leap year: 29 and 30 days before March 1.
  add("r06/short-history", [](RepoMetadata& r) { r.first_commit = date(2024, 2, 1); }, {"C4"});
  add("r07/thirty-days", [](RepoMetadata& r) { r.first_commit = date(2024, 1, 31); }, {});
  add("r08/stale",
      [](RepoMetadata& r) {
        r.first_commit = date(2022, 10, 1);
        r.last_commit = date(2022, 12, 31);
      },
      {"C5"});
  add("r09/cutoff-day",
      [](RepoMetadata& r) {
        r.first_commit = date(2022, 11, 1);
        r.last_commit = date(2023, 1, 1);
      },
      {});
  add("r10/no-ml", [](RepoMetadata& r) { r.imports_ml_libs = false; }, {"C6"});
  add("r11/everything-wrong",
      [](RepoMetadata& r) {
        r.is_fork = true;
        r.stars = 0;
        r.source_file_count = 3;
        r.first_commit = date(2022, 6, 1);
        r.last_commit = date(2022, 6, 11);
        r.imports_ml_libs = false;
      },
      {"C1", "C2", "C3", "C4", "C5", "C6"});
  add("r12/unstarred-non-ml",
      [](RepoMetadata& r) {
        r.stars = 0;
        r.imports_ml_libs = false;
      },
      {"C2", "C6"});
  return cases;
}

}  // namespace smellscan::testing

#endif  // SMELLSCAN_TESTS_SUPPORT_FILTER_FIXTURE_HPP_
