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

// List, set and dict comprehension detectors: an empty container followed by
// a loop that only fills it.

#include "smellscan/smells.hpp"
#include "smells/analysis.hpp"

namespace smellscan {

namespace {

using detail::any_of;
using detail::contains_kind;

// Name or attribute chain rooted at a name, e.g. `self.items`.
bool is_container_ref(const Node& n) {
  if (n.is(NodeKind::Name)) return true;
  return n.is(NodeKind::Attribute) && is_container_ref(*n.child(0));
}

bool is_empty_container(const Node& value, SmellKind kind) {
  switch (kind) {
    case SmellKind::ListComprehension:
      return value.is(NodeKind::List) && value.size() == 0;
    case SmellKind::DictComprehension:
      return value.is(NodeKind::Dict) && value.size() == 0;
    default:
      return value.is(NodeKind::Call) && value.size() == 1 &&
             value.child(0)->is(NodeKind::Name) && value.child(0)->text == "set";
  }
}

const Node& root_of(const Node& ref) {
  return ref.is(NodeKind::Attribute) ? root_of(*ref.child(0)) : ref;
}

bool refers_to(const Node& expr, const Node& container) {
  if (container.is(NodeKind::Name)) return detail::mentions_name(expr, container.text);
  return any_of(expr, [&](const Node& n) { return structural_equal(n, container); });
}

// Pieces of the loop body that make up the comprehension.
struct Filling {
  const Node* key = nullptr;    // element, or dict key
  const Node* value = nullptr;  // dict value
  const Node* condition = nullptr;
};

// `N.method(E)` with exactly one plain positional argument.
const Node* single_call_arg(const Node& stmt, const Node& container, std::string_view method) {
  if (!stmt.is(NodeKind::ExprStmt)) return nullptr;
  const Node& call = *stmt.child(0);
  if (!call.is(NodeKind::Call) || call.size() != 2) return nullptr;
  const Node& func = *call.child(0);
  if (!func.is(NodeKind::Attribute) || func.text != method ||
      !structural_equal(*func.child(0), container)) {
    return nullptr;
  }
  const Node& arg = *call.child(1);
  if (arg.is(NodeKind::Starred) || arg.is(NodeKind::Keyword)) return nullptr;
  return &arg;
}

std::optional<Filling> match_filling(const Node& loop, const Node& container, SmellKind kind) {
  const Node& body = *loop.child(2);
  if (body.size() != 1) return std::nullopt;
  Filling f;
  const Node* stmt = body.child(0);
  if (stmt->is(NodeKind::If)) {
    if (stmt->child(2) != nullptr || stmt->child(1)->size() != 1) return std::nullopt;
    f.condition = stmt->child(0);
    stmt = stmt->child(1)->child(0);
  }
  switch (kind) {
    case SmellKind::ListComprehension:
      f.key = single_call_arg(*stmt, container, "append");
      break;
    case SmellKind::SetComprehension:
      f.key = single_call_arg(*stmt, container, "add");
      break;
    default: {
      if (!stmt->is(NodeKind::Assign) || stmt->size() != 2) return std::nullopt;
      const Node& target = *stmt->child(0);
      if (!target.is(NodeKind::Subscript) || !structural_equal(*target.child(0), container) ||
          target.child(1)->is(NodeKind::Slice) ||
          contains_kind(*target.child(1), {NodeKind::Slice})) {
        return std::nullopt;
      }
      f.key = target.child(1);
      f.value = stmt->child(1);
      // The loop evaluates the value before the key; the comprehension the
      // other way round.
      if (!is_pure(*f.key) && !is_pure(*f.value)) return std::nullopt;
      break;
    }
  }
  if (f.key == nullptr) return std::nullopt;
  return f;
}

std::vector<Detection> detect_accumulation(const SourceUnit& unit, SmellKind kind) {
  std::vector<Detection> out;
  detail::for_each_statement_list(unit.tree(), [&](const std::vector<NodePtr>& stmts) {
    for (std::size_t i = 0; i + 1 < stmts.size(); ++i) {
      const Node& init = *stmts[i];
      const Node& loop = *stmts[i + 1];
      if (!init.is(NodeKind::Assign) || init.size() != 2) continue;
      if (!loop.is(NodeKind::For) || loop.is_async || loop.child(3) != nullptr) continue;
      const Node& container = *init.child(0);
      if (!is_container_ref(container) || !is_empty_container(*init.child(1), kind)) continue;
      const std::optional<Filling> f = match_filling(loop, container, kind);
      if (!f) continue;

      const Node& target = *loop.child(0);
      const Node& iter = *loop.child(1);
      const auto names = detail::target_names(target);
      if (!names) continue;
      std::vector<const Node*> parts = {&iter, f->key};
      if (f->value != nullptr) parts.push_back(f->value);
      if (f->condition != nullptr) parts.push_back(f->condition);
      bool ok = !refers_to(target, container);
      for (const Node* p : parts) {
        ok = ok && !refers_to(*p, container) &&
             !contains_kind(*p, {NodeKind::Yield, NodeKind::YieldFrom, NodeKind::Await,
                                 NodeKind::NamedExpr});
      }
      if (!ok) continue;

      const Node& scope = detail::scope_of(loop);
      if (scope.is(NodeKind::ClassDef) || scope.is(NodeKind::Lambda)) continue;
      for (const std::string& name : *names) {
        if (name == root_of(container).text) ok = false;
        if (detail::has_dynamic_binding(scope, name) ||
            detail::used_outside(scope, name, loop)) {
          ok = false;
        }
      }
      if (!ok) continue;

      std::string element;
      std::string open = "[";
      std::string close = "]";
      if (kind == SmellKind::DictComprehension) {
        open = "{";
        close = "}";
        element = expr_text(unit, *f->key, prec::kLambda, true) + ": " +
                  expr_text(unit, *f->value, prec::kLambda, true);
      } else {
        if (kind == SmellKind::SetComprehension) {
          open = "{";
          close = "}";
        }
        element = expr_text(unit, *f->key, prec::kNamedExpr, true);
      }
      std::string text = std::string(unit.slice(container.range)) + " = " + open + element +
                         " for " + std::string(unit.slice(target.range)) + " in " +
                         expr_text(unit, iter, prec::kOr, true);
      if (f->condition != nullptr) {
        text += " if " + expr_text(unit, *f->condition, prec::kOr, true);
      }
      text += close;
      out.push_back(detail::make_detection(
          unit, kind, SourceRange::between(init.range.start(), loop.range.end()), text));
    }
  });
  detail::finalize(out);
  return out;
}

}  // namespace

std::vector<Detection> detect_list_comprehension(const SourceUnit& unit) {
  return detect_accumulation(unit, SmellKind::ListComprehension);
}

std::vector<Detection> detect_set_comprehension(const SourceUnit& unit) {
  return detect_accumulation(unit, SmellKind::SetComprehension);
}

std::vector<Detection> detect_dict_comprehension(const SourceUnit& unit) {
  return detect_accumulation(unit, SmellKind::DictComprehension);
}

}  // namespace smellscan
