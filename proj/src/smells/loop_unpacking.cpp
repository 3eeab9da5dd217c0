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

// For Multi Targets: a loop variable that is only ever indexed by constants.

#include <array>

#include "smellscan/smells.hpp"
#include "smells/analysis.hpp"

namespace smellscan {

namespace {

// `item[i]` loads inside the loop, or nullopt if `item` is used any other way.
std::optional<std::vector<std::pair<const Node*, long long>>> indexed_uses(const Node& region,
                                                                           std::string_view item) {
  std::vector<std::pair<const Node*, long long>> uses;
  bool ok = true;
  walk(region, [&](const Node& n) {
    if (!ok) return false;
    if (!n.is(NodeKind::Name) || n.text != item) return true;
    const Node* sub = n.parent;
    if (sub == nullptr || !sub->is(NodeKind::Subscript) || sub->child(0) != &n ||
        sub->ctx != ExprContext::Load) {
      ok = false;
      return false;
    }
    const auto index = detail::int_literal(*sub->child(1));
    if (!index) {
      ok = false;
      return false;
    }
    uses.emplace_back(sub, *index);
    return true;
  });
  if (!ok || uses.empty()) return std::nullopt;
  return uses;
}

bool name_taken(const Node& scope, const std::string& name) {
  return detail::mentions_name(scope, name) || detail::binds_name(scope, name);
}

// First base whose `base`, `base_0` ... `base_k` are all unused in `scope`.
std::optional<std::string> fresh_base(const Node& scope, long long max_index) {
  static constexpr std::array<std::string_view, 4> kBases = {"e", "el", "elem", "item_e"};
  for (std::string_view base : kBases) {
    bool free = !name_taken(scope, std::string(base));
    for (long long i = 0; free && i <= max_index; ++i) {
      free = !name_taken(scope, std::string(base) + "_" + std::to_string(i));
    }
    if (free) return std::string(base);
  }
  return std::nullopt;
}

}  // namespace

std::vector<Detection> detect_for_multi_targets(const SourceUnit& unit) {
  std::vector<Detection> out;
  walk(unit.tree(), [&](const Node& loop) {
    if (!loop.is(NodeKind::For) || !loop.child(0)->is(NodeKind::Name)) return true;
    const std::string& item = loop.child(0)->text;
    const Node& iter = *loop.child(1);
    const Node& body = *loop.child(2);
    const Node* orelse = loop.child(3);
    if (detail::mentions_name(iter, item) || detail::binds_name(body, item) ||
        (orelse != nullptr && detail::binds_name(*orelse, item))) {
      return true;
    }
    auto uses = indexed_uses(body, item);
    if (!uses) return true;
    if (orelse != nullptr) {
      if (detail::mentions_name(*orelse, item)) {
        auto more = indexed_uses(*orelse, item);
        if (!more) return true;
        uses->insert(uses->end(), more->begin(), more->end());
      }
    }

    const Node& scope = detail::scope_of(loop);
    if (scope.is(NodeKind::ClassDef) || detail::has_dynamic_binding(scope, item) ||
        detail::used_outside(scope, item, loop)) {
      return true;
    }
    long long max_index = 0;
    for (const auto& [sub, index] : *uses) max_index = std::max(max_index, index);
    const auto base = fresh_base(scope, max_index);
    if (!base) return true;

    std::string header;
    for (long long i = 0; i <= max_index; ++i) header += *base + "_" + std::to_string(i) + ", ";
    header += "*" + *base;
    std::vector<std::pair<SourceRange, std::string>> edits;
    edits.emplace_back(loop.child(0)->range, header);
    for (const auto& [sub, index] : *uses) {
      edits.emplace_back(sub->range, *base + "_" + std::to_string(index));
    }
    out.push_back(detail::make_detection(unit, SmellKind::ForMultiTargets, loop.range,
                                         detail::splice(unit, loop.range, std::move(edits))));
    return true;
  });
  detail::finalize(out);
  return out;
}

}  // namespace smellscan
