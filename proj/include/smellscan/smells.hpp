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

#ifndef SMELLSCAN_SMELLS_HPP_
#define SMELLSCAN_SMELLS_HPP_

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "smellscan/syntax.hpp"

namespace smellscan {

enum class SmellKind {
  ListComprehension,
  SetComprehension,
  DictComprehension,
  ChainCompare,
  TruthValueTest,
  ForElse,
  AssignMultiTargets,
  CallStar,
  ForMultiTargets,
};

inline constexpr std::array<SmellKind, 9> kAllSmellKinds = {
    SmellKind::ListComprehension,  SmellKind::SetComprehension, SmellKind::DictComprehension,
    SmellKind::ChainCompare,       SmellKind::TruthValueTest,   SmellKind::ForElse,
    SmellKind::AssignMultiTargets, SmellKind::CallStar,         SmellKind::ForMultiTargets,
};

// Display name as used in reports, e.g. "Truth Value Test".
std::string_view smell_name(SmellKind kind);
std::optional<SmellKind> smell_from_name(std::string_view name);

struct Detection {
  std::string file_path;
  ScopeInfo scope;
  SmellKind kind = SmellKind::ListComprehension;
  std::vector<std::string> compli_code;
  std::vector<std::string> simple_code;
  std::vector<SourceRange> ranges;

  friend bool operator==(const Detection&, const Detection&) = default;
};

struct SmellConfig {
  std::set<SmellKind> enabled{kAllSmellKinds.begin(), kAllSmellKinds.end()};
  // Calls whose `is True` / `is False` comparisons may be dropped.
  std::vector<std::string> truth_value_allowlist{"isinstance", "callable", "hasattr", "issubclass"};
  int call_star_min_run = 2;
};

std::vector<Detection> detect_list_comprehension(const SourceUnit& unit);
std::vector<Detection> detect_set_comprehension(const SourceUnit& unit);
std::vector<Detection> detect_dict_comprehension(const SourceUnit& unit);
std::vector<Detection> detect_chain_compare(const SourceUnit& unit);
std::vector<Detection> detect_truth_value_test(const SourceUnit& unit,
                                               const SmellConfig& config = {});
std::vector<Detection> detect_for_else(const SourceUnit& unit);
std::vector<Detection> detect_assign_multi_targets(const SourceUnit& unit);
std::vector<Detection> detect_call_star(const SourceUnit& unit, const SmellConfig& config = {});
std::vector<Detection> detect_for_multi_targets(const SourceUnit& unit);

// Runs every enabled detector. Results are ordered by start position, then
// by smell name.
std::vector<Detection> scan_unit(const SourceUnit& unit, const SmellConfig& config = {});

// Replaces the text covered by the detection with its rewrite.
std::string apply_rewrite(std::string_view text, const Detection& detection);

}  // namespace smellscan

#endif  // SMELLSCAN_SMELLS_HPP_
