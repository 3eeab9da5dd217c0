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

#include "smellscan/ast.hpp"

namespace smellscan {

std::string_view kind_name(NodeKind kind) {
  switch (kind) {
    // clang-format off
#define SMELLSCAN_KIND(k) \
  case NodeKind::k:       \
    return #k;
    SMELLSCAN_KIND(Module) SMELLSCAN_KIND(Block) SMELLSCAN_KIND(Seq)
    SMELLSCAN_KIND(ExprStmt) SMELLSCAN_KIND(Assign) SMELLSCAN_KIND(AugAssign)
    SMELLSCAN_KIND(AnnAssign) SMELLSCAN_KIND(Return) SMELLSCAN_KIND(Raise)
    SMELLSCAN_KIND(Delete) SMELLSCAN_KIND(Global) SMELLSCAN_KIND(Nonlocal)
    SMELLSCAN_KIND(Import) SMELLSCAN_KIND(ImportFrom) SMELLSCAN_KIND(Alias)
    SMELLSCAN_KIND(Assert) SMELLSCAN_KIND(If) SMELLSCAN_KIND(While)
    SMELLSCAN_KIND(For) SMELLSCAN_KIND(Try) SMELLSCAN_KIND(ExceptHandler)
    SMELLSCAN_KIND(With) SMELLSCAN_KIND(WithItem) SMELLSCAN_KIND(FunctionDef)
    SMELLSCAN_KIND(ClassDef) SMELLSCAN_KIND(Match) SMELLSCAN_KIND(MatchCase)
    SMELLSCAN_KIND(Pattern) SMELLSCAN_KIND(TypeAlias) SMELLSCAN_KIND(TypeParam)
    SMELLSCAN_KIND(Pass) SMELLSCAN_KIND(Break) SMELLSCAN_KIND(Continue)
    SMELLSCAN_KIND(BoolOp) SMELLSCAN_KIND(NamedExpr) SMELLSCAN_KIND(BinOp)
    SMELLSCAN_KIND(UnaryOp) SMELLSCAN_KIND(Lambda) SMELLSCAN_KIND(IfExp)
    SMELLSCAN_KIND(Dict) SMELLSCAN_KIND(KeyValue) SMELLSCAN_KIND(DoubleStarred)
    SMELLSCAN_KIND(Set) SMELLSCAN_KIND(List) SMELLSCAN_KIND(Tuple)
    SMELLSCAN_KIND(ListComp) SMELLSCAN_KIND(SetComp) SMELLSCAN_KIND(DictComp)
    SMELLSCAN_KIND(GeneratorExp) SMELLSCAN_KIND(Comprehension)
    SMELLSCAN_KIND(Await) SMELLSCAN_KIND(Yield) SMELLSCAN_KIND(YieldFrom)
    SMELLSCAN_KIND(Compare) SMELLSCAN_KIND(Call) SMELLSCAN_KIND(Keyword)
    SMELLSCAN_KIND(JoinedStr) SMELLSCAN_KIND(FormattedValue)
    SMELLSCAN_KIND(Constant) SMELLSCAN_KIND(Attribute) SMELLSCAN_KIND(Subscript)
    SMELLSCAN_KIND(Slice) SMELLSCAN_KIND(Starred) SMELLSCAN_KIND(Name)
    SMELLSCAN_KIND(Arguments) SMELLSCAN_KIND(Arg)
#undef SMELLSCAN_KIND
    // clang-format on
  }
  return "?";
}

bool is_statement(NodeKind kind) {
  return kind >= NodeKind::ExprStmt && kind <= NodeKind::Continue && kind != NodeKind::Alias &&
         kind != NodeKind::ExceptHandler && kind != NodeKind::WithItem &&
         kind != NodeKind::MatchCase && kind != NodeKind::Pattern && kind != NodeKind::TypeParam;
}

bool is_expression(NodeKind kind) {
  switch (kind) {
    case NodeKind::KeyValue:
    case NodeKind::DoubleStarred:
    case NodeKind::Comprehension:
    case NodeKind::Keyword:
    case NodeKind::FormattedValue:
    case NodeKind::Slice:
      return false;
    default:
      return kind >= NodeKind::BoolOp && kind <= NodeKind::Name;
  }
}

void walk(const Node& root, const std::function<bool(const Node&)>& visit) {
  if (!visit(root)) return;
  for (const auto& c : root.children) {
    if (c) walk(*c, visit);
  }
}

const Node* body_of(const Node& stmt) {
  switch (stmt.kind) {
    case NodeKind::If:
    case NodeKind::While:
      return stmt.child(1);
    case NodeKind::For:
      return stmt.child(2);
    case NodeKind::Try:
      return stmt.child(0);
    case NodeKind::With:
    case NodeKind::ExceptHandler:
      return stmt.child(1);
    case NodeKind::FunctionDef:
      return stmt.child(3);
    case NodeKind::ClassDef:
      return stmt.child(2);
    default:
      return nullptr;
  }
}

const Node* orelse_of(const Node& stmt) {
  switch (stmt.kind) {
    case NodeKind::If:
    case NodeKind::While:
      return stmt.child(2);
    case NodeKind::For:
      return stmt.child(3);
    case NodeKind::Try:
      return stmt.child(2);
    default:
      return nullptr;
  }
}

}  // namespace smellscan
