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

// Before/after rewrite pairs, one per smell kind.

#ifndef SMELLSCAN_TESTS_SUPPORT_GOLDEN_HPP_
#define SMELLSCAN_TESTS_SUPPORT_GOLDEN_HPP_

#include <string>
#include <vector>

#include "smellscan/smells.hpp"
#include "smellscan/tokenizer.hpp"
#include "support/fixtures.hpp"

namespace smellscan::testing {

struct GoldenPair {
  SmellKind kind;
  std::string stem;
};

inline const std::vector<GoldenPair>& golden_pairs() {
  static const std::vector<GoldenPair> pairs = {
      {SmellKind::ListComprehension, "list_comprehension"},
      {SmellKind::SetComprehension, "set_comprehension"},
      {SmellKind::DictComprehension, "dict_comprehension"},
      {SmellKind::ChainCompare, "chain_compare"},
      {SmellKind::TruthValueTest, "truth_value_test"},
      {SmellKind::ForElse, "for_else"},
      {SmellKind::AssignMultiTargets, "assign_multi_targets"},
      {SmellKind::CallStar, "call_star"},
      {SmellKind::ForMultiTargets, "for_multi_targets"},
  };
  return pairs;
}

// Token texts without layout tokens, so that only line breaks and
// indentation may differ.
inline std::vector<std::string> significant_tokens(const std::string& text) {
  const LineIndex index(text);
  std::vector<std::string> out;
  for (const Token& t : tokenize(text, index, "<golden>")) {
    if (t.type == TokenType::Newline || t.type == TokenType::Indent ||
        t.type == TokenType::Dedent || t.type == TokenType::EndMarker) {
      continue;
    }
    out.emplace_back(t.text);
  }
  return out;
}

struct GoldenResult {
  bool ok = false;
  std::string detail;
};

inline GoldenResult check_golden(const GoldenPair& pair) {
  const std::string before = read_file(data_path("golden/" + pair.stem + ".before.py"));
  const std::string after = read_file(data_path("golden/" + pair.stem + ".after.py"));
  const SourceUnit unit = parse_unit(pair.stem + ".before.py", before);
  const std::vector<Detection> found = scan_unit(unit);
  if (found.size() != 1) {
    return {false, "expected one detection, found " + std::to_string(found.size())};
  }
  if (found.front().kind != pair.kind) {
    return {false, "wrong kind " + std::string(smell_name(found.front().kind))};
  }
  const std::string rewritten = apply_rewrite(before, found.front());
  if (significant_tokens(rewritten) != significant_tokens(after)) {
    return {false, "rewrite differs:\n" + rewritten};
  }
  return {true, ""};
}

}  // namespace smellscan::testing

#endif  // SMELLSCAN_TESTS_SUPPORT_GOLDEN_HPP_
