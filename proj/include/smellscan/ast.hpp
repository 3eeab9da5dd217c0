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

/// @file ast.hpp
/// @brief Uniform syntax tree for Python 3 source.
///
/// Every construct is a Node with a kind, a source range, an optional text
/// payload and an ordered child list. Optional slots are null pointers so the
/// layout of each kind is positional and fixed. Slot layouts:
///
///   Module        stmt*
///   Block         stmt*
///   Seq           any*                      (helper list inside fixed slots)
///   ExprStmt      [value]
///   Assign        [target+, value]
///   AugAssign     [target, value]           text = "+=" etc.
///   AnnAssign     [target, annotation, value?]
///   Return        [value?]
///   Raise         [exc?, cause?]
///   Delete        [target+]
///   Global        [Name+]
///   Nonlocal      [Name+]
///   Import        [Alias+]
///   ImportFrom    [Alias+]                  text = module, level = dots
///   Alias         []                        text = dotted name, aux = asname
///   Assert        [test, msg?]
///   If            [test, body, orelse?]     orelse is a Block; elif is a
///                                           Block holding one If (is_elif)
///   While         [test, body, orelse?]
///   For           [target, iter, body, orelse?]   is_async
///   Try           [body, handlers: Seq, orelse?, finalbody?]
///   ExceptHandler [type?, body]             text = bound name
///   With          [items: Seq, body]        is_async
///   WithItem      [context, vars?]
///   FunctionDef   [decorators: Seq, args: Arguments, returns?, body,
///                  type_params?: Seq]       text = name, is_async
///   ClassDef      [decorators: Seq, bases: Seq, body, type_params?: Seq]
///   Match         [subject, MatchCase+]
///   MatchCase     [pattern, guard?, body]
///   Pattern       children vary             aux = value|capture|wildcard|
///                                           star|or|sequence|mapping|class|
///                                           as|keyword|double_star
///   TypeAlias     [name, type_params?: Seq, value]
///   TypeParam     [bound?, default?]        text = name
///   Pass, Break, Continue                   leaves
///
///   BoolOp        [value+]                  text = "and" | "or"
///   NamedExpr     [target, value]
///   BinOp         [left, right]             text = operator
///   UnaryOp       [operand]                 text = "not" | "-" | "+" | "~"
///   Lambda        [args: Arguments, body]
///   IfExp         [body, test, orelse]
///   Dict          [KeyValue | DoubleStarred]*
///   KeyValue      [key, value]
///   DoubleStarred [value]
///   Set, List, Tuple  [elt*]
///   ListComp, SetComp, GeneratorExp  [elt, Comprehension+]
///   DictComp      [key, value, Comprehension+]
///   Comprehension [target, iter, if*]       is_async
///   Await, YieldFrom  [value]
///   Yield         [value?]
///   Compare       [left, comparator+]       ops holds one operator per pair
///   Call          [func, (arg | Starred | Keyword)*]
///   Keyword       [value]                   text = name, empty for **kw
///   JoinedStr     [FormattedValue*]         text = literal source
///   FormattedValue [value, spec-field*]
///   Constant      []                        text = literal source,
///                                           aux = int|float|complex|str|
///                                           bytes|None|True|False|Ellipsis
///   Attribute     [value]                   text = attribute name
///   Subscript     [value, slice]
///   Slice         [lower?, upper?, step?]
///   Starred       [value]
///   Name          []                        text = identifier
///   Arguments     [Arg*]
///   Arg           [annotation?, default?]   text = name, aux = posonly|
///                                           normal|vararg|kwonly|kwarg
#ifndef SMELLSCAN_AST_HPP_
#define SMELLSCAN_AST_HPP_

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "smellscan/source.hpp"

namespace smellscan {

enum class NodeKind {
  Module,
  Block,
  Seq,
  // statements
  ExprStmt,
  Assign,
  AugAssign,
  AnnAssign,
  Return,
  Raise,
  Delete,
  Global,
  Nonlocal,
  Import,
  ImportFrom,
  Alias,
  Assert,
  If,
  While,
  For,
  Try,
  ExceptHandler,
  With,
  WithItem,
  FunctionDef,
  ClassDef,
  Match,
  MatchCase,
  Pattern,
  TypeAlias,
  TypeParam,
  Pass,
  Break,
  Continue,
  // expressions
  BoolOp,
  NamedExpr,
  BinOp,
  UnaryOp,
  Lambda,
  IfExp,
  Dict,
  KeyValue,
  DoubleStarred,
  Set,
  List,
  Tuple,
  ListComp,
  SetComp,
  DictComp,
  GeneratorExp,
  Comprehension,
  Await,
  Yield,
  YieldFrom,
  Compare,
  Call,
  Keyword,
  JoinedStr,
  FormattedValue,
  Constant,
  Attribute,
  Subscript,
  Slice,
  Starred,
  Name,
  Arguments,
  Arg,
};

std::string_view kind_name(NodeKind kind);

enum class ExprContext { Load, Store, Del };

struct Node {
  NodeKind kind = NodeKind::Module;
  SourceRange range;
  std::string text;
  std::string aux;
  std::vector<std::string> ops;
  std::vector<std::unique_ptr<Node>> children;
  const Node* parent = nullptr;
  ExprContext ctx = ExprContext::Load;
  int level = 0;
  bool is_async = false;
  bool is_elif = false;
  // Source has parentheses around this node. For tuples and generator
  // expressions the parentheses are part of `range`; for everything else
  // they are not.
  bool parenthesized = false;
  // Extent including the outermost enclosing parentheses; meaningful only
  // when `parenthesized` is set.
  SourceRange paren_range;

  Node() = default;
  Node(NodeKind k, SourceRange r) : kind(k), range(r) {}

  const Node* child(std::size_t i) const {
    return i < children.size() ? children[i].get() : nullptr;
  }
  std::size_t size() const { return children.size(); }
  bool is(NodeKind k) const { return kind == k; }
  SourceRange outer() const { return parenthesized ? paren_range : range; }
};

using NodePtr = std::unique_ptr<Node>;

bool is_statement(NodeKind kind);
bool is_expression(NodeKind kind);

// Pre-order traversal. The visitor returns false to skip a node's subtree.
void walk(const Node& root, const std::function<bool(const Node&)>& visit);

// Body accessors for compound statements; null when the kind has no such slot.
const Node* body_of(const Node& stmt);
const Node* orelse_of(const Node& stmt);

}  // namespace smellscan

#endif  // SMELLSCAN_AST_HPP_
