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

#include "smells/analysis.hpp"

#include <algorithm>
#include <array>

namespace smellscan::detail {

namespace {

bool is_scope(const Node& n) {
  return n.is(NodeKind::Module) || n.is(NodeKind::FunctionDef) || n.is(NodeKind::ClassDef) ||
         n.is(NodeKind::Lambda);
}

bool is_comprehension(const Node& n) {
  return n.is(NodeKind::ListComp) || n.is(NodeKind::SetComp) || n.is(NodeKind::DictComp) ||
         n.is(NodeKind::GeneratorExp);
}

bool target_binds(const Node& target, std::string_view name) {
  return any_of(target, [&](const Node& n) {
    return n.is(NodeKind::Name) && n.ctx == ExprContext::Store && n.text == name;
  });
}

// Whether `name` is local to the function or lambda `fn`.
bool binds_locally(const Node& fn, std::string_view name) {
  const Node& args = fn.is(NodeKind::Lambda) ? *fn.child(0) : *fn.child(1);
  for (const auto& arg : args.children) {
    if (arg->text == name) return true;
  }
  if (fn.is(NodeKind::Lambda)) return false;
  bool declared = false;
  bool bound = false;
  walk(*fn.child(3), [&](const Node& n) {
    switch (n.kind) {
      case NodeKind::Global:
      case NodeKind::Nonlocal:
        for (const auto& id : n.children) declared = declared || id->text == name;
        return false;
      case NodeKind::FunctionDef:
      case NodeKind::ClassDef:
        bound = bound || n.text == name;
        return false;
      case NodeKind::Lambda:
      case NodeKind::Comprehension:
        return false;
      case NodeKind::Name:
        bound = bound || (n.ctx != ExprContext::Load && n.text == name);
        return false;
      case NodeKind::ExceptHandler:
        bound = bound || n.text == name;
        return true;
      case NodeKind::Alias: {
        const std::string_view head = std::string_view(n.text).substr(0, n.text.find('.'));
        bound = bound || (n.aux.empty() ? head == name : n.aux == name);
        return false;
      }
      default:
        return true;
    }
  });
  return bound && !declared;
}

// Whether the occurrence `use` is shadowed by an intervening binder below
// `scope` and outside `region`.
bool rebound_before_use(const Node& use, std::string_view name, const Node& scope,
                        const Node& region) {
  const Node* child = &use;
  for (const Node* p = use.parent; p != nullptr && p != &scope; child = p, p = p->parent) {
    if (p == &region) return false;
    if (p->is(NodeKind::For) && child == p->child(2) && target_binds(*p->child(0), name)) {
      return true;
    }
    if (p->is(NodeKind::FunctionDef) && child == p->child(3) && binds_locally(*p, name)) {
      return true;
    }
    if (p->is(NodeKind::Lambda) && child == p->child(1) && binds_locally(*p, name)) {
      return true;
    }
    if (is_comprehension(*p)) {
      const std::size_t first_gen = p->is(NodeKind::DictComp) ? 2 : 1;
      bool binds = false;
      for (std::size_t i = first_gen; i < p->size(); ++i) {
        if (target_binds(*p->child(i)->child(0), name)) binds = true;
      }
      // The first iterable is evaluated in the enclosing scope.
      const bool in_first_iter = is_within(use, *p->child(first_gen)->child(1));
      if (binds && !in_first_iter) return true;
    }
  }
  return false;
}

}  // namespace

const Node& scope_of(const Node& node) {
  const Node* p = node.parent;
  while (p != nullptr && !is_scope(*p)) p = p->parent;
  return p != nullptr ? *p : node;
}

bool is_within(const Node& node, const Node& ancestor) {
  for (const Node* p = &node; p != nullptr; p = p->parent) {
    if (p == &ancestor) return true;
  }
  return false;
}

bool any_of(const Node& root, const std::function<bool(const Node&)>& pred) {
  bool found = false;
  walk(root, [&](const Node& n) {
    if (found) return false;
    if (pred(n)) found = true;
    return !found;
  });
  return found;
}

bool mentions_name(const Node& root, std::string_view name) {
  return any_of(root, [&](const Node& n) { return n.is(NodeKind::Name) && n.text == name; });
}

bool contains_kind(const Node& root, std::initializer_list<NodeKind> kinds) {
  return any_of(root, [&](const Node& n) {
    return std::find(kinds.begin(), kinds.end(), n.kind) != kinds.end();
  });
}

void for_each_statement_list(const Node& root,
                             const std::function<void(const std::vector<NodePtr>&)>& visit) {
  walk(root, [&](const Node& n) {
    if (n.is(NodeKind::Module) || n.is(NodeKind::Block)) visit(n.children);
    return true;
  });
}

std::optional<std::vector<std::string>> target_names(const Node& target) {
  std::vector<std::string> names;
  bool ok = true;
  walk(target, [&](const Node& n) {
    switch (n.kind) {
      case NodeKind::Name:
        names.push_back(n.text);
        return false;
      case NodeKind::Tuple:
      case NodeKind::List:
      case NodeKind::Starred:
        return true;
      default:
        ok = false;
        return false;
    }
  });
  if (!ok || names.empty()) return std::nullopt;
  return names;
}

bool has_dynamic_binding(const Node& scope, std::string_view name) {
  static constexpr std::array<std::string_view, 5> kIntrospection = {"locals", "vars",
                                                                     "globals", "eval", "exec"};
  return any_of(scope, [&](const Node& n) {
    if (n.is(NodeKind::Global) || n.is(NodeKind::Nonlocal)) {
      for (const auto& id : n.children) {
        if (id->text == name) return true;
      }
      return false;
    }
    if (n.is(NodeKind::Call) && n.child(0)->is(NodeKind::Name)) {
      const std::string& f = n.child(0)->text;
      return std::find(kIntrospection.begin(), kIntrospection.end(), f) != kIntrospection.end();
    }
    return false;
  });
}

bool used_outside(const Node& scope, std::string_view name, const Node& region) {
  return any_of(scope, [&](const Node& n) {
    if (!n.is(NodeKind::Name) || n.text != name || n.ctx == ExprContext::Store) return false;
    if (is_within(n, region)) return false;
    return !rebound_before_use(n, name, scope, region);
  });
}

bool binds_name(const Node& root, std::string_view name) {
  return any_of(root, [&](const Node& n) {
    switch (n.kind) {
      case NodeKind::Name:
        return n.ctx == ExprContext::Store && n.text == name;
      case NodeKind::Arg:
      case NodeKind::FunctionDef:
      case NodeKind::ClassDef:
      case NodeKind::ExceptHandler:
        return n.text == name;
      case NodeKind::Alias: {
        if (!n.aux.empty()) return n.aux == name;
        const std::string_view head = std::string_view(n.text).substr(0, n.text.find('.'));
        return head == name;
      }
      default:
        return false;
    }
  });
}

bool is_private_local(const Node& scope, std::string_view name) {
  if (!scope.is(NodeKind::FunctionDef)) return false;
  if (has_dynamic_binding(scope, name)) return false;
  return !any_of(*body_of(scope), [&](const Node& n) {
    if (n.is(NodeKind::FunctionDef) || n.is(NodeKind::ClassDef) || n.is(NodeKind::Lambda) ||
        is_comprehension(n)) {
      return mentions_name(n, name);
    }
    return false;
  });
}

std::optional<long long> int_literal(const Node& node) {
  if (!node.is(NodeKind::Constant) || node.aux != "int" || node.parenthesized) return std::nullopt;
  const std::string& t = node.text;
  if (t.empty() || t.size() > 12) return std::nullopt;
  if (t.size() > 1 && t[0] == '0') return std::nullopt;
  long long value = 0;
  for (char c : t) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

Detection make_detection(const SourceUnit& unit, SmellKind kind, const SourceRange& range,
                         const std::string& simple) {
  Detection d;
  d.file_path = unit.path();
  d.scope = enclosing_scope(unit, range);
  d.kind = kind;
  d.compli_code = unit.slice_lines(range);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= simple.size(); ++i) {
    if (i == simple.size() || simple[i] == '\n') {
      std::string line = simple.substr(start, i - start);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      d.simple_code.push_back(std::move(line));
      start = i + 1;
    }
  }
  d.ranges.push_back(range);
  return d;
}

std::string splice(const SourceUnit& unit, const SourceRange& outer,
                   std::vector<std::pair<SourceRange, std::string>> edits) {
  std::sort(edits.begin(), edits.end(), [](const auto& a, const auto& b) {
    return a.first.start() < b.first.start();
  });
  const LineIndex& index = unit.index();
  const std::string_view text = unit.text();
  std::size_t cursor = index.offset(outer.start());
  std::string out;
  for (const auto& [range, replacement] : edits) {
    const std::size_t b = index.offset(range.start());
    out.append(text.substr(cursor, b - cursor));
    out += replacement;
    cursor = index.offset(range.end());
  }
  const std::size_t end = index.offset(outer.end());
  out.append(text.substr(cursor, end - cursor));
  return out;
}

void finalize(std::vector<Detection>& detections) {
  std::stable_sort(detections.begin(), detections.end(), [](const auto& a, const auto& b) {
    return a.ranges.front().start() < b.ranges.front().start();
  });
  std::vector<Detection> kept;
  for (auto& d : detections) {
    if (!kept.empty() && kept.back().ranges.front().overlaps(d.ranges.front())) continue;
    kept.push_back(std::move(d));
  }
  detections = std::move(kept);
}

}  // namespace smellscan::detail
