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

#ifndef SMELLSCAN_SYNTAX_HPP_
#define SMELLSCAN_SYNTAX_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "smellscan/ast.hpp"
#include "smellscan/source.hpp"

namespace smellscan {

// One parsed file. Immutable after construction; safe to share across
// threads.
class SourceUnit {
 public:
  SourceUnit(std::string path, std::string text, NodePtr tree);
  SourceUnit(SourceUnit&&) noexcept = default;
  SourceUnit& operator=(SourceUnit&&) noexcept = default;
  SourceUnit(const SourceUnit&) = delete;
  SourceUnit& operator=(const SourceUnit&) = delete;

  const std::string& path() const { return path_; }
  std::string_view text() const { return text_; }
  const Node& tree() const { return *tree_; }
  const LineIndex& index() const { return index_; }
  const std::vector<std::size_t>& line_offsets() const { return index_.offsets(); }

  std::string_view slice(const SourceRange& range) const;
  // The text at `range` split into lines, without line terminators.
  std::vector<std::string> slice_lines(const SourceRange& range) const;
  // Line `line` (1-based) without its terminator.
  std::string_view line(int line) const;
  // Leading whitespace of line `line`.
  std::string_view indent_of(int line) const;

 private:
  std::string path_;
  std::string text_;
  LineIndex index_;
  NodePtr tree_;
};

// Parses `text` as Python 3. A leading UTF-8 byte order mark is dropped.
// Throws ParseError for invalid UTF-8 or invalid syntax.
SourceUnit parse_unit(std::string path, std::string text);

struct ScopeInfo {
  std::string class_name;
  std::string function_name;

  friend bool operator==(const ScopeInfo&, const ScopeInfo&) = default;
};

// Innermost enclosing function and innermost enclosing class of `range`,
// judged by containment in their bodies. Empty strings when absent.
ScopeInfo enclosing_scope(const SourceUnit& unit, const SourceRange& range);

// Same expression up to whitespace, comments and parentheses.
bool structural_equal(const Node& a, const Node& b);

// Names, literals, attribute chains, subscripts and arithmetic over pure
// operands. Anything that may call user code through a call, await, yield or
// comprehension is impure.
bool is_pure(const Node& expr);

// Binding strength of an expression, higher binds tighter.
namespace prec {
inline constexpr int kTuple = 0;
inline constexpr int kNamedExpr = 1;
inline constexpr int kLambda = 3;
inline constexpr int kIfExp = 4;
inline constexpr int kOr = 5;
inline constexpr int kAnd = 6;
inline constexpr int kNot = 7;
inline constexpr int kCompare = 8;
inline constexpr int kBitOr = 9;
inline constexpr int kBitXor = 10;
inline constexpr int kBitAnd = 11;
inline constexpr int kShift = 12;
inline constexpr int kArith = 13;
inline constexpr int kTerm = 14;
inline constexpr int kFactor = 15;
inline constexpr int kPower = 16;
inline constexpr int kAwait = 17;
inline constexpr int kAtom = 18;
}  // namespace prec

int precedence(const Node& expr);

// Source text of `expr` suitable for a slot that needs at least `min_prec`.
// Parentheses are added (or the original ones kept) when the expression binds
// looser than the slot, or when it breaks lines in a way that is only legal
// inside brackets and the slot is not bracketed.
std::string expr_text(const SourceUnit& unit, const Node& expr, int min_prec,
                      bool bracketed = false);

}  // namespace smellscan

#endif  // SMELLSCAN_SYNTAX_HPP_
