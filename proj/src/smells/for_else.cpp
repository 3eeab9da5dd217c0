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

// For Else: a boolean flag that only records whether a loop was left through
// `break`.

#include "smellscan/smells.hpp"
#include "smells/analysis.hpp"

namespace smellscan {

namespace {

bool is_bool_literal(const Node& n, std::string_view value) {
  return n.is(NodeKind::Constant) && n.aux == value;
}

// `flag = <value>`
bool is_flag_store(const Node& stmt, std::string_view flag, std::string_view value) {
  return stmt.is(NodeKind::Assign) && stmt.size() == 2 && stmt.child(0)->is(NodeKind::Name) &&
         stmt.child(0)->text == flag && is_bool_literal(*stmt.child(1), value);
}

// Loop that a `break` statement leaves.
const Node* loop_of(const Node& brk) {
  for (const Node* p = brk.parent; p != nullptr; p = p->parent) {
    if (p->is(NodeKind::For) || p->is(NodeKind::While)) {
      return p;
    }
    if (p->is(NodeKind::FunctionDef) || p->is(NodeKind::ClassDef)) return nullptr;
  }
  return nullptr;
}

// Index of `stmt` in its parent statement list.
std::size_t position_in(const Node& stmt) {
  const auto& siblings = stmt.parent->children;
  for (std::size_t i = 0; i < siblings.size(); ++i) {
    if (siblings[i].get() == &stmt) return i;
  }
  return siblings.size();
}

struct FlagUse {
  std::vector<const Node*> stores;  // `flag = not initial` statements to delete
  bool ok = true;
};

// Checks that inside `loop` every break that leaves it is directly preceded
// by `flag = flipped`, and that such stores appear nowhere else.
FlagUse check_loop(const Node& loop, std::string_view flag, std::string_view flipped) {
  FlagUse use;
  const Node& body = *loop.child(2);
  if (detail::mentions_name(*loop.child(0), flag) || detail::mentions_name(*loop.child(1), flag)) {
    use.ok = false;
    return use;
  }
  int breaks = 0;
  walk(body, [&](const Node& n) {
    if (!use.ok) return false;
    if (n.is(NodeKind::Break) && loop_of(n) == &loop) {
      ++breaks;
      const std::size_t i = position_in(n);
      const Node* prev = i > 0 ? n.parent->child(i - 1) : nullptr;
      if (prev == nullptr || !is_flag_store(*prev, flag, flipped)) use.ok = false;
      return false;
    }
    if (is_flag_store(n, flag, flipped)) {
      const std::size_t i = position_in(n);
      const Node* next = n.parent->child(i + 1);
      if (next == nullptr || !next->is(NodeKind::Break) || loop_of(*next) != &loop) {
        use.ok = false;
      } else {
        use.stores.push_back(&n);
      }
      return false;
    }
    if (n.is(NodeKind::Name) && n.text == flag) use.ok = false;
    return true;
  });
  if (breaks == 0 || use.stores.size() != static_cast<std::size_t>(breaks)) use.ok = false;
  return use;
}

// Range to delete so that `store` disappears from the loop text.
SourceRange deletion_for(const Node& store) {
  const std::size_t i = position_in(store);
  const Node& next = *store.parent->child(i + 1);
  if (next.range.start_line == store.range.end_line) {
    return SourceRange::between(store.range.start(), next.range.start());
  }
  const Node* prev = i > 0 ? store.parent->child(i - 1) : nullptr;
  if (prev != nullptr && prev->range.end_line == store.range.start_line) {
    return SourceRange::between(prev->range.end(), store.range.end());
  }
  // Whole line, including its terminator.
  const int line = store.range.start_line;
  return SourceRange::between({line, 0}, {store.range.end_line + 1, 0});
}

// Position just past the header colon that follows `test`.
SourcePosition after_header(const SourceUnit& unit, const Node& test) {
  const LineIndex& index = unit.index();
  std::size_t off = index.offset(test.outer().end());
  const std::string_view text = unit.text();
  while (off < text.size() && text[off] != ':') ++off;
  return index.position(off + 1);
}

}  // namespace

std::vector<Detection> detect_for_else(const SourceUnit& unit) {
  std::vector<Detection> out;
  detail::for_each_statement_list(unit.tree(), [&](const std::vector<NodePtr>& stmts) {
    for (std::size_t i = 0; i + 2 < stmts.size(); ++i) {
      const Node& init = *stmts[i];
      const Node& loop = *stmts[i + 1];
      const Node& check = *stmts[i + 2];
      if (!init.is(NodeKind::Assign) || init.size() != 2 || !init.child(0)->is(NodeKind::Name)) {
        continue;
      }
      const Node& value = *init.child(1);
      if (!is_bool_literal(value, "True") && !is_bool_literal(value, "False")) continue;
      const bool initial = value.aux == "True";
      const std::string& flag = init.child(0)->text;
      if (!loop.is(NodeKind::For) || loop.child(3) != nullptr) continue;
      if (!check.is(NodeKind::If) || check.child(2) != nullptr) continue;

      const Node& test = *check.child(0);
      const bool test_ok =
          initial ? test.is(NodeKind::Name) && test.text == flag
                  : test.is(NodeKind::UnaryOp) && test.text == "not" &&
                        test.child(0)->is(NodeKind::Name) && test.child(0)->text == flag;
      if (!test_ok || detail::mentions_name(*check.child(1), flag)) continue;

      const FlagUse use = check_loop(loop, flag, initial ? "False" : "True");
      if (!use.ok) continue;

      // The flag may not be observed anywhere else in its scope.
      const Node& scope = detail::scope_of(loop);
      if (scope.is(NodeKind::ClassDef) || detail::has_dynamic_binding(scope, flag)) continue;
      int occurrences = 0;
      walk(scope, [&](const Node& n) {
        if (n.is(NodeKind::Name) && n.text == flag) ++occurrences;
        return true;
      });
      if (occurrences != 2 + static_cast<int>(use.stores.size())) continue;

      std::vector<std::pair<SourceRange, std::string>> edits;
      for (const Node* store : use.stores) edits.emplace_back(deletion_for(*store), "");
      std::string text = detail::splice(unit, loop.range, std::move(edits));
      text += "\n" + std::string(unit.indent_of(loop.range.start_line)) + "else:";
      const SourcePosition body_start = after_header(unit, test);
      text += std::string(unit.slice(SourceRange::between(body_start, check.range.end())));
      out.push_back(detail::make_detection(
          unit, SmellKind::ForElse, SourceRange::between(init.range.start(), check.range.end()),
          text));
    }
  });
  detail::finalize(out);
  return out;
}

}  // namespace smellscan
