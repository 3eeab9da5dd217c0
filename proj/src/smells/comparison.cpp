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

// Chain Compare and Truth Value Test detectors.

#include <algorithm>

#include "smellscan/smells.hpp"
#include "smells/analysis.hpp"

namespace smellscan {

namespace {

// A comparison chain `x0 op0 x1 op1 ... xn` under construction.
struct Chain {
  std::vector<const Node*> operands;
  std::vector<std::string> ops;
};

std::optional<std::string> mirrored(const std::string& op) {
  if (op == "<") return ">";
  if (op == ">") return "<";
  if (op == "<=") return ">=";
  if (op == ">=") return "<=";
  if (op == "==") return "==";
  return std::nullopt;
}

// Reversed chain, e.g. `a < b` becomes `b > a`. Reversal changes evaluation
// order, so every operand must be pure.
std::optional<Chain> flipped(const Chain& c) {
  Chain r;
  for (auto it = c.operands.rbegin(); it != c.operands.rend(); ++it) {
    if (!is_pure(**it)) return std::nullopt;
    r.operands.push_back(*it);
  }
  for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) {
    auto m = mirrored(*it);
    if (!m) return std::nullopt;
    r.ops.push_back(*m);
  }
  return r;
}

enum class Direction { None, Ascending, Descending, Equal, Mixed };

Direction direction_of(const std::vector<std::string>& ops) {
  Direction d = Direction::None;
  for (const auto& op : ops) {
    Direction here = Direction::Mixed;
    if (op == "<" || op == "<=") here = Direction::Ascending;
    if (op == ">" || op == ">=") here = Direction::Descending;
    if (op == "==") here = Direction::Equal;
    if (here == Direction::Mixed) return Direction::Mixed;
    if (d != Direction::None && d != here) return Direction::Mixed;
    d = here;
  }
  return d;
}

Chain chain_of(const Node& compare) {
  Chain c;
  for (const auto& child : compare.children) c.operands.push_back(child.get());
  c.ops = compare.ops;
  return c;
}

// Joins `left` and `right` into one monotone chain sharing a pure operand.
std::optional<Chain> join(const Chain& left, const Chain& right) {
  const std::optional<Chain> lf = flipped(left);
  const std::optional<Chain> rf = flipped(right);
  const std::vector<std::pair<const Chain*, const Chain*>> orientations = {
      {&left, &right},
      {&left, rf ? &*rf : nullptr},
      {lf ? &*lf : nullptr, &right},
      {lf ? &*lf : nullptr, rf ? &*rf : nullptr},
  };
  for (const auto& [a, b] : orientations) {
    if (a == nullptr || b == nullptr) continue;
    const Node& shared = *a->operands.back();
    if (!is_pure(shared) || !structural_equal(shared, *b->operands.front())) continue;
    Chain merged = *a;
    merged.operands.insert(merged.operands.end(), b->operands.begin() + 1, b->operands.end());
    merged.ops.insert(merged.ops.end(), b->ops.begin(), b->ops.end());
    const Direction d = direction_of(merged.ops);
    if (d == Direction::Mixed || d == Direction::None) continue;
    return merged;
  }
  return std::nullopt;
}

std::string render(const SourceUnit& unit, const Chain& c) {
  std::string out = expr_text(unit, *c.operands[0], prec::kBitOr);
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    out += " " + c.ops[i] + " " + expr_text(unit, *c.operands[i + 1], prec::kBitOr);
  }
  return out;
}

// Expressions whose value is only used for its truth: conditions, `not`
// operands, and operands of and/or chains that are themselves conditions.
void collect_conditions(const Node& n, std::vector<const Node*>& out) {
  if (n.is(NodeKind::BoolOp)) {
    for (const auto& c : n.children) collect_conditions(*c, out);
    return;
  }
  out.push_back(&n);
}

std::vector<const Node*> boolean_contexts(const Node& root) {
  std::vector<const Node*> conditions;
  walk(root, [&](const Node& n) {
    switch (n.kind) {
      case NodeKind::If:
      case NodeKind::While:
      case NodeKind::Assert:
        collect_conditions(*n.child(0), conditions);
        break;
      case NodeKind::IfExp:
        collect_conditions(*n.child(1), conditions);
        break;
      case NodeKind::MatchCase:
        if (n.child(1) != nullptr) collect_conditions(*n.child(1), conditions);
        break;
      case NodeKind::Comprehension:
        for (std::size_t i = 2; i < n.size(); ++i) collect_conditions(*n.child(i), conditions);
        break;
      case NodeKind::UnaryOp:
        if (n.text == "not") collect_conditions(*n.child(0), conditions);
        break;
      default:
        break;
    }
    return true;
  });
  return conditions;
}

}  // namespace

std::vector<Detection> detect_chain_compare(const SourceUnit& unit) {
  std::vector<Detection> out;
  walk(unit.tree(), [&](const Node& n) {
    if (!n.is(NodeKind::BoolOp) || n.text != "and") return true;
    std::size_t i = 0;
    while (i < n.size()) {
      if (!n.child(i)->is(NodeKind::Compare)) {
        ++i;
        continue;
      }
      Chain chain = chain_of(*n.child(i));
      std::size_t j = i + 1;
      while (j < n.size() && n.child(j)->is(NodeKind::Compare)) {
        auto merged = join(chain, chain_of(*n.child(j)));
        if (!merged) break;
        chain = std::move(*merged);
        ++j;
      }
      if (j - i >= 2) {
        const SourceRange range = SourceRange::between(n.child(i)->outer().start(),
                                                       n.child(j - 1)->outer().end());
        out.push_back(detail::make_detection(unit, SmellKind::ChainCompare, range,
                                             render(unit, chain)));
        i = j;
      } else {
        ++i;
      }
    }
    return true;
  });
  detail::finalize(out);
  return out;
}

std::vector<Detection> detect_truth_value_test(const SourceUnit& unit, const SmellConfig& config) {
  std::vector<Detection> out;
  for (const Node* cond : boolean_contexts(unit.tree())) {
    if (!cond->is(NodeKind::Compare) || cond->ops.size() != 1) continue;
    const std::string& op = cond->ops[0];
    const Node& left = *cond->child(0);
    const Node& right = *cond->child(1);
    std::optional<std::string> rewrite;
    if (right.is(NodeKind::Constant) && !right.parenthesized) {
      if (op == "==" && right.text == "0") {
        rewrite = "not " + expr_text(unit, left, prec::kNot);
      } else if (op == "!=" && right.text == "0") {
        rewrite = expr_text(unit, left, prec::kCompare);
      } else if (op == "==" && right.text == "1" && left.is(NodeKind::BinOp) &&
                 left.text == "%" && left.child(1)->is(NodeKind::Constant) &&
                 left.child(1)->text == "2") {
        rewrite = expr_text(unit, left, prec::kCompare);
      } else if (op == "is" && (right.aux == "True" || right.aux == "False") &&
                 left.is(NodeKind::Call) && left.child(0)->is(NodeKind::Name)) {
        const auto& allow = config.truth_value_allowlist;
        if (std::find(allow.begin(), allow.end(), left.child(0)->text) != allow.end()) {
          rewrite = right.aux == "True" ? expr_text(unit, left, prec::kCompare)
                                        : "not " + expr_text(unit, left, prec::kNot);
        }
      }
    }
    if (!rewrite) continue;
    out.push_back(detail::make_detection(unit, SmellKind::TruthValueTest, cond->range, *rewrite));
  }
  detail::finalize(out);
  return out;
}

}  // namespace smellscan
