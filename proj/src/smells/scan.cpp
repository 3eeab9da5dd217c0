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

#include <algorithm>

#include "smellscan/smells.hpp"

namespace smellscan {

std::string_view smell_name(SmellKind kind) {
  switch (kind) {
    case SmellKind::ListComprehension:
      return "List Comprehension";
    case SmellKind::SetComprehension:
      return "Set Comprehension";
    case SmellKind::DictComprehension:
      return "Dict Comprehension";
    case SmellKind::ChainCompare:
      return "Chain Compare";
    case SmellKind::TruthValueTest:
      return "Truth Value Test";
    case SmellKind::ForElse:
      return "For Else";
    case SmellKind::AssignMultiTargets:
      return "Assign Multi Targets";
    case SmellKind::CallStar:
      return "Call Star";
    case SmellKind::ForMultiTargets:
      return "For Multi Targets";
  }
  return "";
}

std::optional<SmellKind> smell_from_name(std::string_view name) {
  for (SmellKind kind : kAllSmellKinds) {
    if (smell_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::vector<Detection> scan_unit(const SourceUnit& unit, const SmellConfig& config) {
  std::vector<Detection> all;
  auto add = [&](std::vector<Detection> found) {
    all.insert(all.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  };
  const auto& on = config.enabled;
  if (on.contains(SmellKind::ListComprehension)) {
    add(detect_list_comprehension(unit));
  }
  if (on.contains(SmellKind::SetComprehension)) {
    add(detect_set_comprehension(unit));
  }
  if (on.contains(SmellKind::DictComprehension)) {
    add(detect_dict_comprehension(unit));
  }
  if (on.contains(SmellKind::ChainCompare)) add(detect_chain_compare(unit));
  if (on.contains(SmellKind::TruthValueTest)) {
    add(detect_truth_value_test(unit, config));
  }
  if (on.contains(SmellKind::ForElse)) add(detect_for_else(unit));
  if (on.contains(SmellKind::AssignMultiTargets)) {
    add(detect_assign_multi_targets(unit));
  }
  if (on.contains(SmellKind::CallStar)) add(detect_call_star(unit, config));
  if (on.contains(SmellKind::ForMultiTargets)) {
    add(detect_for_multi_targets(unit));
  }
  std::stable_sort(all.begin(), all.end(), [](const Detection& a, const Detection& b) {
    const SourcePosition pa = a.ranges.front().start();
    const SourcePosition pb = b.ranges.front().start();
    if (pa != pb) return pa < pb;
    return smell_name(a.kind) < smell_name(b.kind);
  });
  return all;
}

std::string apply_rewrite(std::string_view text, const Detection& detection) {
  const LineIndex index(text);
  const SourceRange& range = detection.ranges.front();
  const std::size_t begin = index.offset(range.start());
  const std::size_t end = index.offset(range.end());
  std::string out(text.substr(0, begin));
  for (std::size_t i = 0; i < detection.simple_code.size(); ++i) {
    if (i > 0) out += '\n';
    out += detection.simple_code[i];
  }
  out.append(text.substr(end));
  return out;
}

}  // namespace smellscan
