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

#include "smellscan/syntax.hpp"

#include "smellscan/parser.hpp"

namespace smellscan {

namespace {

// Returns the offset of the first invalid byte, or npos.
std::size_t find_invalid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    unsigned min = 0;
    unsigned cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2, min = 0x80, cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3, min = 0x800, cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4, min = 0x10000, cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::string_view::npos;
}

bool same_opt(const Node* a, const Node* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return structural_equal(*a, *b);
}

}  // namespace

SourceUnit::SourceUnit(std::string path, std::string text, NodePtr tree)
    : path_(std::move(path)), text_(std::move(text)), index_(text_), tree_(std::move(tree)) {}

std::string_view SourceUnit::slice(const SourceRange& range) const {
  const std::size_t b = index_.offset(range.start());
  const std::size_t e = index_.offset(range.end());
  return std::string_view(text_).substr(b, e > b ? e - b : 0);
}

std::vector<std::string> SourceUnit::slice_lines(const SourceRange& range) const {
  std::vector<std::string> lines;
  const std::string_view s = slice(range);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '\n' || s[i] == '\r') {
      lines.emplace_back(s.substr(start, i - start));
      if (i < s.size() && s[i] == '\r' && i + 1 < s.size() && s[i + 1] == '\n') ++i;
      start = i + 1;
    }
  }
  return lines;
}

std::string_view SourceUnit::line(int line) const {
  if (line < 1 || line > index_.line_count()) return {};
  const std::size_t b = index_.offsets()[line - 1];
  std::size_t e = line < index_.line_count() ? index_.offsets()[line] : text_.size();
  while (e > b && (text_[e - 1] == '\n' || text_[e - 1] == '\r')) --e;
  return std::string_view(text_).substr(b, e - b);
}

std::string_view SourceUnit::indent_of(int line_no) const {
  const std::string_view l = line(line_no);
  std::size_t i = 0;
  while (i < l.size() && (l[i] == ' ' || l[i] == '\t' || l[i] == '\f')) ++i;
  return l.substr(0, i);
}

SourceUnit parse_unit(std::string path, std::string text) {
  if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) text.erase(0, 3);
  if (const std::size_t bad = find_invalid_utf8(text); bad != std::string_view::npos) {
    const LineIndex index(text);
    throw ParseError(path, index.position(bad), "invalid UTF-8 byte");
  }
  const LineIndex index(text);
  NodePtr tree = parse_module(text, index, path);
  return SourceUnit(std::move(path), std::move(text), std::move(tree));
}

ScopeInfo enclosing_scope(const SourceUnit& unit, const SourceRange& range) {
  ScopeInfo scope;
  const Node* node = &unit.tree();
  // Descend along the chain of definitions whose body contains the range.
  while (true) {
    const Node* next = nullptr;
    walk(*node, [&](const Node& n) {
      if (next != nullptr) return false;
      if (&n != node && (n.is(NodeKind::FunctionDef) || n.is(NodeKind::ClassDef))) {
        const Node* body = body_of(n);
        if (body != nullptr && body->range.contains(range)) next = &n;
        return false;
      }
      return n.range.contains(range) || &n == node;
    });
    if (next == nullptr) break;
    if (next->is(NodeKind::FunctionDef)) {
      scope.function_name = next->text;
    } else {
      scope.class_name = next->text;
    }
    node = next;
  }
  return scope;
}

bool structural_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.text != b.text || a.ops != b.ops || a.is_async != b.is_async ||
      a.level != b.level || a.children.size() != b.children.size()) {
    return false;
  }
  if (a.kind == NodeKind::Pattern && a.aux != b.aux) return false;
  if (a.kind == NodeKind::Arg && a.aux != b.aux) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!same_opt(a.child(i), b.child(i))) return false;
  }
  return true;
}

bool is_pure(const Node& e) {
  switch (e.kind) {
    case NodeKind::Name:
    case NodeKind::Constant:
      return true;
    case NodeKind::Attribute:
    case NodeKind::UnaryOp:
    case NodeKind::Subscript:
    case NodeKind::BinOp:
    case NodeKind::Tuple:
    case NodeKind::Slice:
      for (const auto& c : e.children) {
        if (c && !is_pure(*c)) return false;
      }
      return true;
    default:
      return false;
  }
}

int precedence(const Node& e) {
  switch (e.kind) {
    case NodeKind::Tuple:
      return e.parenthesized ? prec::kAtom : prec::kTuple;
    case NodeKind::Yield:
    case NodeKind::YieldFrom:
    case NodeKind::Starred:
      return prec::kTuple;
    case NodeKind::NamedExpr:
      return prec::kNamedExpr;
    case NodeKind::Lambda:
      return prec::kLambda;
    case NodeKind::IfExp:
      return prec::kIfExp;
    case NodeKind::BoolOp:
      return e.text == "or" ? prec::kOr : prec::kAnd;
    case NodeKind::UnaryOp:
      return e.text == "not" ? prec::kNot : prec::kFactor;
    case NodeKind::Compare:
      return prec::kCompare;
    case NodeKind::BinOp:
      if (e.text == "|") return prec::kBitOr;
      if (e.text == "^") return prec::kBitXor;
      if (e.text == "&") return prec::kBitAnd;
      if (e.text == "<<" || e.text == ">>") return prec::kShift;
      if (e.text == "+" || e.text == "-") return prec::kArith;
      if (e.text == "**") return prec::kPower;
      return prec::kTerm;
    case NodeKind::Await:
      return prec::kAwait;
    default:
      return prec::kAtom;
  }
}

namespace {

// Whether `code` contains a line break that is only legal inside enclosing
// brackets: not escaped, not inside a string and not inside its own brackets.
bool has_bare_line_break(std::string_view code) {
  int depth = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const char c = code[i];
    switch (c) {
      case '(':
      case '[':
      case '{':
        ++depth;
        break;
      case ')':
      case ']':
      case '}':
        --depth;
        break;
      case '\\':
        ++i;
        break;
      case '#':
        while (i + 1 < code.size() && code[i + 1] != '\n') ++i;
        break;
      case '\n':
        if (depth <= 0) return true;
        break;
      case '\'':
      case '"': {
        const bool triple = code.substr(i, 3) == std::string(3, c);
        const std::size_t quote_len = triple ? 3 : 1;
        i += quote_len;
        while (i < code.size()) {
          if (code[i] == '\\') {
            i += 2;
          } else if (code.substr(i, quote_len) == std::string(quote_len, c)) {
            i += quote_len - 1;
            break;
          } else {
            ++i;
          }
        }
        break;
      }
      default:
        break;
    }
  }
  return false;
}

}  // namespace

std::string expr_text(const SourceUnit& unit, const Node& expr, int min_prec, bool bracketed) {
  const std::string_view inner = unit.slice(expr.range);
  const bool loose = precedence(expr) < min_prec;
  const bool needs_wrap = loose || (!bracketed && has_bare_line_break(inner));
  if (!needs_wrap) return std::string(inner);
  if (expr.parenthesized) {
    const std::string_view outer = unit.slice(expr.paren_range);
    if (outer.size() > inner.size()) return std::string(outer);
  }
  return "(" + std::string(inner) + ")";
}

}  // namespace smellscan
