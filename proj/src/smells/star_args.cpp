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

// Call Star: consecutive positional arguments `s[c], s[c+1], ...`.

#include <set>

#include "smellscan/smells.hpp"
#include "smells/analysis.hpp"

namespace smellscan {

namespace {

// Base and index of a positional `s[c]` argument.
struct Indexed {
  const Node* arg = nullptr;
  const Node* base = nullptr;
  long long index = 0;
};

std::optional<Indexed> indexed_arg(const Node& arg) {
  if (!arg.is(NodeKind::Subscript)) return std::nullopt;
  const Node& base = *arg.child(0);
  if (!is_pure(base)) return std::nullopt;
  const auto index = detail::int_literal(*arg.child(1));
  if (!index) return std::nullopt;
  return Indexed{&arg, &base, *index};
}

// Replacement edits for every qualifying run among the arguments of `call`.
std::vector<std::pair<SourceRange, std::string>> runs_in(const SourceUnit& unit, const Node& call,
                                                         int min_run) {
  std::vector<std::pair<SourceRange, std::string>> edits;
  std::vector<Indexed> run;
  auto flush = [&] {
    if (run.size() >= static_cast<std::size_t>(std::max(min_run, 2))) {
      const long long first = run.front().index;
      const std::string text = "*" + expr_text(unit, *run.front().base, prec::kAtom) + "[" +
                               std::to_string(first) + ":" +
                               std::to_string(first + static_cast<long long>(run.size())) + "]";
      edits.emplace_back(
          SourceRange::between(run.front().arg->outer().start(), run.back().arg->outer().end()),
          text);
    }
    run.clear();
  };
  for (std::size_t i = 1; i < call.size(); ++i) {
    const auto item = indexed_arg(*call.child(i));
    if (!item) {
      flush();
      continue;
    }
    if (!run.empty() && (!structural_equal(*run.back().base, *item->base) ||
                         item->index != run.back().index + 1)) {
      flush();
    }
    run.push_back(*item);
  }
  flush();
  return edits;
}

}  // namespace

std::vector<Detection> detect_call_star(const SourceUnit& unit, const SmellConfig& config) {
  std::vector<Detection> out;
  std::vector<const Node*> calls;
  walk(unit.tree(), [&](const Node& n) {
    if (n.is(NodeKind::Call) && !runs_in(unit, n, config.call_star_min_run).empty()) {
      calls.push_back(&n);
    }
    return true;
  });
  const std::set<const Node*> with_runs(calls.begin(), calls.end());
  for (const Node* call : calls) {
    bool nested = false;
    for (const Node* p = call->parent; p != nullptr && !nested; p = p->parent) {
      nested = with_runs.contains(p);
    }
    if (nested) continue;
    std::vector<std::pair<SourceRange, std::string>> edits;
    for (const Node* inner : calls) {
      if (!detail::is_within(*inner, *call)) continue;
      auto more = runs_in(unit, *inner, config.call_star_min_run);
      edits.insert(edits.end(), more.begin(), more.end());
    }
    out.push_back(detail::make_detection(unit, SmellKind::CallStar, call->range,
                                         detail::splice(unit, call->range, std::move(edits))));
  }
  detail::finalize(out);
  return out;
}

}  // namespace smellscan
