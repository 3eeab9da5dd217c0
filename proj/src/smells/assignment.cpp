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

// Assign Multi Targets: swaps through a temporary, and runs of independent
// single assignments.

#include "smellscan/smells.hpp"
#include "smells/analysis.hpp"

namespace smellscan {

namespace {

using detail::contains_kind;
using detail::mentions_name;

bool is_simple_target(const Node& n) {
  if (n.is(NodeKind::Name)) return true;
  return (n.is(NodeKind::Attribute) || n.is(NodeKind::Subscript)) && is_pure(n);
}

// `target = value` with one plain target and a value that binds nothing.
bool is_simple_assign(const Node& stmt) {
  if (!stmt.is(NodeKind::Assign) || stmt.size() != 2) return false;
  if (!is_simple_target(*stmt.child(0))) return false;
  return !contains_kind(*stmt.child(1), {NodeKind::Yield, NodeKind::YieldFrom,
                                         NodeKind::NamedExpr, NodeKind::Starred});
}

const Node* root_name(const Node& target) {
  const Node* n = &target;
  while (n->is(NodeKind::Attribute) || n->is(NodeKind::Subscript)) n = n->child(0);
  return n->is(NodeKind::Name) ? n : nullptr;
}

bool has_side_channel(const Node& value) {
  return contains_kind(value, {NodeKind::Call, NodeKind::Await, NodeKind::ListComp,
                               NodeKind::SetComp, NodeKind::DictComp, NodeKind::GeneratorExp,
                               NodeKind::JoinedStr});
}

// Whether `next` may join a run whose statements are `run`.
bool independent(const std::vector<const Node*>& run, const Node& next, const Node& scope) {
  const Node& target = *next.child(0);
  const Node& value = *next.child(1);
  const bool opaque = has_side_channel(value);
  for (const Node* earlier : run) {
    const Node& t = *earlier->child(0);
    if (structural_equal(t, target)) return false;
    const Node* root = root_name(t);
    if (root == nullptr || mentions_name(value, root->text)) return false;
    if (!t.is(NodeKind::Name)) {
      // A store through an attribute or subscript may be visible through an
      // alias, so the later value must not look into any object.
      if (opaque || contains_kind(value, {NodeKind::Attribute, NodeKind::Subscript})) {
        return false;
      }
    } else if (opaque && !detail::is_private_local(scope, t.text)) {
      return false;
    }
  }
  return true;
}

std::string tuple_text(const SourceUnit& unit, const std::vector<const Node*>& parts) {
  std::string out;
  for (const Node* p : parts) {
    if (!out.empty()) out += ", ";
    out += expr_text(unit, *p, prec::kLambda);
  }
  return out;
}

// Whether a comment sits between two statements, which a merge would drop.
bool comment_between(const SourceUnit& unit, const Node& first, const Node& second) {
  return unit.slice(SourceRange::between(first.range.end(), second.range.start())).find('#') !=
         std::string_view::npos;
}

// `t = X; X = Y; Y = t` starting at stmts[i].
bool is_swap(const SourceUnit& unit, const std::vector<NodePtr>& stmts, std::size_t i,
             const Node& scope) {
  const Node& s0 = *stmts[i];
  const Node& s1 = *stmts[i + 1];
  const Node& s2 = *stmts[i + 2];
  if (!is_simple_assign(s0) || !is_simple_assign(s1) || !is_simple_assign(s2)) return false;
  if (comment_between(unit, s0, s1) || comment_between(unit, s1, s2)) return false;
  const Node& temp = *s0.child(0);
  if (!temp.is(NodeKind::Name)) return false;
  const Node& x = *s0.child(1);
  const Node& y = *s1.child(1);
  if (!is_simple_target(x) || !is_simple_target(y)) return false;
  if (!structural_equal(*s1.child(0), x) || !structural_equal(*s2.child(0), y)) return false;
  if (structural_equal(x, y)) return false;
  const Node& back = *s2.child(1);
  if (!back.is(NodeKind::Name) || back.text != temp.text) return false;
  if (mentions_name(x, temp.text) || mentions_name(y, temp.text)) return false;
  if (scope.is(NodeKind::ClassDef) || detail::has_dynamic_binding(scope, temp.text)) {
    return false;
  }
  return !detail::used_outside(scope, temp.text, back);
}

}  // namespace

std::vector<Detection> detect_assign_multi_targets(const SourceUnit& unit) {
  std::vector<Detection> out;
  detail::for_each_statement_list(unit.tree(), [&](const std::vector<NodePtr>& stmts) {
    if (stmts.empty()) return;
    const Node& scope = detail::scope_of(*stmts.front());
    std::vector<bool> consumed(stmts.size(), false);
    for (std::size_t i = 0; i + 2 < stmts.size(); ++i) {
      if (consumed[i] || !is_swap(unit, stmts, i, scope)) continue;
      const Node& x = *stmts[i]->child(1);
      const Node& y = *stmts[i + 1]->child(1);
      const std::string text = tuple_text(unit, {&x, &y}) + " = " + tuple_text(unit, {&y, &x});
      out.push_back(detail::make_detection(
          unit, SmellKind::AssignMultiTargets,
          SourceRange::between(stmts[i]->range.start(), stmts[i + 2]->range.end()), text));
      consumed[i] = consumed[i + 1] = consumed[i + 2] = true;
      i += 2;
    }

    std::vector<const Node*> run;
    auto flush = [&] {
      if (run.size() >= 2) {
        std::vector<const Node*> targets;
        std::vector<const Node*> values;
        for (const Node* s : run) {
          targets.push_back(s->child(0));
          values.push_back(s->child(1));
        }
        const std::string text = tuple_text(unit, targets) + " = " + tuple_text(unit, values);
        out.push_back(detail::make_detection(
            unit, SmellKind::AssignMultiTargets,
            SourceRange::between(run.front()->range.start(), run.back()->range.end()), text));
      }
      run.clear();
    };
    for (std::size_t i = 0; i < stmts.size(); ++i) {
      const Node& s = *stmts[i];
      if (consumed[i] || !is_simple_assign(s)) {
        flush();
        continue;
      }
      if (!run.empty() &&
          (comment_between(unit, *run.back(), s) || !independent(run, s, scope))) {
        flush();
      }
      run.push_back(&s);
    }
    flush();
  });
  detail::finalize(out);
  return out;
}

}  // namespace smellscan
