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

// Recursive-descent parser for Python 3 following the layering of the
// reference PEG grammar (statements -> star_expressions -> disjunction ->
// ... -> primary -> atom).

#include "smellscan/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "smellscan/tokenizer.hpp"

namespace smellscan {

namespace {

constexpr std::array<std::string_view, 13> kAugOps = {
    "+=", "-=", "*=", "/=", "//=", "%=", "@=", "&=", "|=", "^=", ">>=", "<<=", "**="};

void link_parents(Node& node) {
  for (auto& c : node.children) {
    if (!c) continue;
    c->parent = &node;
    link_parents(*c);
  }
}

class Parser {
 public:
  Parser(std::string_view src, const LineIndex& index, const std::string& path,
         std::vector<Token> tokens)
      : src_(src), index_(index), path_(path), toks_(std::move(tokens)) {}

  NodePtr parse_file() {
    auto module = std::make_unique<Node>(NodeKind::Module, SourceRange{});
    while (!at(TokenType::EndMarker)) {
      if (at(TokenType::Newline)) {
        advance();
        continue;
      }
      statement(module->children);
    }
    const SourcePosition end = index_.position(src_.size());
    module->range = SourceRange::between({1, 0}, end);
    return module;
  }

  NodePtr parse_fragment() {
    if (at(TokenType::EndMarker)) error(peek(), "f-string: empty expression not allowed");
    NodePtr e = at_kw("yield") ? yield_expr() : star_expressions();
    if (!at(TokenType::EndMarker)) error(peek(), "invalid syntax");
    return e;
  }

 private:
  // ---- token helpers ------------------------------------------------------

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& prev() const { return toks_[pos_ == 0 ? 0 : pos_ - 1]; }
  bool at(TokenType t) const { return peek().type == t; }
  bool at_op(std::string_view op, std::size_t k = 0) const {
    return peek(k).type == TokenType::Op && peek(k).text == op;
  }
  bool at_kw(std::string_view kw, std::size_t k = 0) const {
    return peek(k).type == TokenType::Name && peek(k).text == kw;
  }
  bool at_identifier(std::size_t k = 0) const {
    return peek(k).type == TokenType::Name && !is_keyword(peek(k).text);
  }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void error(const Token& tok, const std::string& message) const {
    throw ParseError(path_, tok.start, message);
  }

  const Token& expect_op(std::string_view op) {
    if (!at_op(op)) {
      error(peek(), describe_unexpected("expected '" + std::string(op) + "'"));
    }
    return advance();
  }
  const Token& expect_kw(std::string_view kw) {
    if (!at_kw(kw)) error(peek(), "expected '" + std::string(kw) + "'");
    return advance();
  }
  const Token& expect_identifier() {
    if (!at_identifier()) error(peek(), describe_unexpected("expected a name"));
    return advance();
  }
  void expect_newline() {
    if (!at(TokenType::Newline)) error(peek(), describe_unexpected("invalid syntax"));
    advance();
  }

  std::string describe_unexpected(const std::string& base) const {
    const Token& t = peek();
    switch (t.type) {
      case TokenType::Newline:
        return base + " (unexpected end of line)";
      case TokenType::Indent:
        return "unexpected indent";
      case TokenType::Dedent:
        return base + " (unexpected dedent)";
      case TokenType::EndMarker:
        return base + " (unexpected end of file)";
      default:
        return base + " near '" + std::string(t.text) + "'";
    }
  }

  NodePtr make(NodeKind kind, SourcePosition start) const {
    return std::make_unique<Node>(kind, SourceRange::between(start, last_stop()));
  }
  static NodePtr make_span(NodeKind kind, const Node& first, const Node& last) {
    return std::make_unique<Node>(kind,
                                  SourceRange::between(first.outer().start(), last.outer().end()));
  }
  // End of the last consumed token that is not layout.
  SourcePosition last_stop() const {
    std::size_t i = pos_;
    while (i > 0) {
      const Token& t = toks_[--i];
      if (t.type != TokenType::Newline && t.type != TokenType::Indent &&
          t.type != TokenType::Dedent) {
        return t.stop;
      }
    }
    return toks_.front().start;
  }
  void finish(Node& n) const { n.range = SourceRange::between(n.range.start(), last_stop()); }

  bool can_start_expression(std::size_t k = 0) const {
    const Token& t = peek(k);
    switch (t.type) {
      case TokenType::Number:
      case TokenType::String:
        return true;
      case TokenType::Name:
        return !is_keyword(t.text) || t.text == "True" || t.text == "False" || t.text == "None" ||
               t.text == "not" || t.text == "lambda" || t.text == "await";
      case TokenType::Op:
        return t.text == "(" || t.text == "[" || t.text == "{" || t.text == "-" || t.text == "+" ||
               t.text == "~" || t.text == "*" || t.text == "...";
      default:
        return false;
    }
  }

  // ---- statements ---------------------------------------------------------

  void statement(std::vector<NodePtr>& out) {
    if (at(TokenType::Indent)) error(peek(), "unexpected indent");
    if (at(TokenType::Dedent)) error(peek(), "unexpected dedent");
    if (NodePtr compound = compound_statement()) {
      out.push_back(std::move(compound));
      return;
    }
    simple_statements(out);
  }

  NodePtr compound_statement() {
    if (at_kw("if")) return if_statement();
    if (at_kw("while")) return while_statement();
    if (at_kw("for")) return for_statement(peek().start, false);
    if (at_kw("try")) return try_statement();
    if (at_kw("with")) return with_statement(peek().start, false);
    if (at_kw("def")) return function_def(peek().start, nullptr, false);
    if (at_kw("class")) return class_def(peek().start, nullptr);
    if (at_op("@")) return decorated();
    if (at_kw("async")) {
      const SourcePosition start = advance().start;
      if (at_kw("def")) return function_def(start, nullptr, true);
      if (at_kw("for")) return for_statement(start, true);
      if (at_kw("with")) return with_statement(start, true);
      error(peek(), "invalid syntax after 'async'");
    }
    if (at_kw("match") && !at_op("=", 1) && !at_op(".", 1)) {
      if (NodePtr m = try_match_statement()) return m;
    }
    return nullptr;
  }

  void simple_statements(std::vector<NodePtr>& out) {
    while (true) {
      out.push_back(simple_statement());
      if (at_op(";")) {
        advance();
        if (at(TokenType::Newline)) break;
        continue;
      }
      break;
    }
    expect_newline();
  }

  NodePtr block() {
    auto blk = std::make_unique<Node>(NodeKind::Block, SourceRange{});
    if (at(TokenType::Newline)) {
      advance();
      if (!at(TokenType::Indent)) error(peek(), "expected an indented block");
      advance();
      while (!at(TokenType::Dedent) && !at(TokenType::EndMarker)) {
        statement(blk->children);
      }
      if (at(TokenType::Dedent)) advance();
    } else {
      simple_statements(blk->children);
    }
    blk->range = SourceRange::between(blk->children.front()->range.start(),
                                      blk->children.back()->range.end());
    return blk;
  }

  // Wraps a statement list already parsed into a Block node.
  static NodePtr block_of(NodePtr stmt) {
    auto blk = std::make_unique<Node>(NodeKind::Block, stmt->range);
    blk->children.push_back(std::move(stmt));
    return blk;
  }

  NodePtr simple_statement() {
    const Token& first = peek();
    const SourcePosition start = first.start;
    if (at_kw("pass") || at_kw("break") || at_kw("continue")) {
      const NodeKind kind = first.text == "pass"    ? NodeKind::Pass
                            : first.text == "break" ? NodeKind::Break
                                                    : NodeKind::Continue;
      advance();
      return make(kind, start);
    }
    if (at_kw("return")) {
      advance();
      auto n = make(NodeKind::Return, start);
      if (can_start_expression()) n->children.push_back(star_expressions());
      finish(*n);
      return n;
    }
    if (at_kw("raise")) {
      advance();
      auto n = make(NodeKind::Raise, start);
      if (can_start_expression()) {
        n->children.push_back(expression());
        if (at_kw("from")) {
          advance();
          n->children.push_back(expression());
        }
      }
      finish(*n);
      return n;
    }
    if (at_kw("global") || at_kw("nonlocal")) {
      const NodeKind kind = first.text == "global" ? NodeKind::Global : NodeKind::Nonlocal;
      advance();
      auto n = make(kind, start);
      do {
        if (!n->children.empty()) advance();
        const Token& name = expect_identifier();
        auto id =
            std::make_unique<Node>(NodeKind::Name, SourceRange::between(name.start, name.stop));
        id->text = std::string(name.text);
        n->children.push_back(std::move(id));
      } while (at_op(","));
      finish(*n);
      return n;
    }
    if (at_kw("del")) {
      advance();
      auto n = make(NodeKind::Delete, start);
      do {
        if (!n->children.empty()) {
          advance();
          if (at(TokenType::Newline) || at_op(";")) break;
        }
        NodePtr target = bitwise_or();
        set_context(*target, ExprContext::Del);
        n->children.push_back(std::move(target));
      } while (at_op(","));
      finish(*n);
      return n;
    }
    if (at_kw("import")) return import_name();
    if (at_kw("from")) return import_from();
    if (at_kw("assert")) {
      advance();
      auto n = make(NodeKind::Assert, start);
      n->children.push_back(expression());
      if (at_op(",")) {
        advance();
        n->children.push_back(expression());
      }
      finish(*n);
      return n;
    }
    if (at_kw("type") && at_identifier(1) && (at_op("=", 2) || at_op("[", 2))) {
      return type_alias();
    }
    return expression_statement();
  }

  NodePtr expression_statement() {
    const SourcePosition start = peek().start;
    NodePtr first = at_kw("yield") ? yield_expr() : star_expressions();
    if (at_op(":")) {
      advance();
      check_single_target(*first, "annotated");
      set_context(*first, ExprContext::Store);
      auto n = make(NodeKind::AnnAssign, start);
      n->children.push_back(std::move(first));
      n->children.push_back(expression());
      if (at_op("=")) {
        advance();
        n->children.push_back(at_kw("yield") ? yield_expr() : star_expressions());
      }
      finish(*n);
      return n;
    }
    if (peek().type == TokenType::Op &&
        std::find(kAugOps.begin(), kAugOps.end(), peek().text) != kAugOps.end()) {
      const std::string op(advance().text);
      check_single_target(*first, "augmented");
      set_context(*first, ExprContext::Store);
      auto n = make(NodeKind::AugAssign, start);
      n->text = op;
      n->children.push_back(std::move(first));
      n->children.push_back(at_kw("yield") ? yield_expr() : star_expressions());
      finish(*n);
      return n;
    }
    if (at_op("=")) {
      auto n = make(NodeKind::Assign, start);
      std::vector<NodePtr> parts;
      parts.push_back(std::move(first));
      while (at_op("=")) {
        advance();
        parts.push_back(at_kw("yield") ? yield_expr() : star_expressions());
      }
      for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        set_context(*parts[i], ExprContext::Store);
      }
      n->children = std::move(parts);
      finish(*n);
      return n;
    }
    if (first->is(NodeKind::Starred)) error(peek(), "can't use starred expression here");
    auto n = make(NodeKind::ExprStmt, start);
    n->children.push_back(std::move(first));
    return n;
  }

  void check_single_target(const Node& target, const char* what) const {
    if (target.is(NodeKind::Name) || target.is(NodeKind::Attribute) ||
        target.is(NodeKind::Subscript)) {
      return;
    }
    throw ParseError(path_, target.range.start(),
                     std::string("illegal target for ") + what + " assignment");
  }

  void set_context(Node& n, ExprContext ctx) const {
    switch (n.kind) {
      case NodeKind::Name:
      case NodeKind::Attribute:
      case NodeKind::Subscript:
        n.ctx = ctx;
        return;
      case NodeKind::Tuple:
      case NodeKind::List:
        n.ctx = ctx;
        for (auto& c : n.children) set_context(*c, ctx);
        return;
      case NodeKind::Starred:
        if (ctx == ExprContext::Store) {
          n.ctx = ctx;
          set_context(*n.children[0], ctx);
          return;
        }
        break;
      default:
        break;
    }
    const std::string verb = ctx == ExprContext::Del ? "delete" : "assign to";
    throw ParseError(path_, n.range.start(),
                     "cannot " + verb + " " + std::string(kind_name(n.kind)));
  }

  std::string dotted_name() {
    std::string name(expect_identifier().text);
    while (at_op(".")) {
      advance();
      name += ".";
      name += expect_identifier().text;
    }
    return name;
  }

  NodePtr import_name() {
    const SourcePosition start = advance().start;
    auto n = make(NodeKind::Import, start);
    do {
      if (!n->children.empty()) advance();
      const SourcePosition astart = peek().start;
      std::string name = dotted_name();
      auto alias = make(NodeKind::Alias, astart);
      alias->text = std::move(name);
      if (at_kw("as")) {
        advance();
        alias->aux = std::string(expect_identifier().text);
        finish(*alias);
      }
      n->children.push_back(std::move(alias));
    } while (at_op(","));
    finish(*n);
    return n;
  }

  NodePtr import_from() {
    const SourcePosition start = advance().start;
    auto n = make(NodeKind::ImportFrom, start);
    while (at_op(".") || at_op("...")) {
      n->level += static_cast<int>(advance().text.size());
    }
    if (!at_kw("import")) n->text = dotted_name();
    if (n->level == 0 && n->text.empty()) error(peek(), "invalid syntax");
    expect_kw("import");
    if (at_op("*")) {
      const Token& star = advance();
      auto alias =
          std::make_unique<Node>(NodeKind::Alias, SourceRange::between(star.start, star.stop));
      alias->text = "*";
      n->children.push_back(std::move(alias));
      finish(*n);
      return n;
    }
    const bool parens = at_op("(");
    if (parens) advance();
    while (true) {
      const SourcePosition astart = peek().start;
      auto alias = std::make_unique<Node>(NodeKind::Alias, SourceRange{});
      alias->text = std::string(expect_identifier().text);
      if (at_kw("as")) {
        advance();
        alias->aux = std::string(expect_identifier().text);
      }
      alias->range = SourceRange::between(astart, prev().stop);
      n->children.push_back(std::move(alias));
      if (!at_op(",")) break;
      advance();
      if (parens && at_op(")")) break;
      if (!parens && (at(TokenType::Newline) || at_op(";"))) {
        error(peek(), "trailing comma not allowed without surrounding parentheses");
      }
    }
    if (parens) expect_op(")");
    finish(*n);
    return n;
  }

  NodePtr type_alias() {
    const SourcePosition start = advance().start;
    auto n = make(NodeKind::TypeAlias, start);
    const Token& name = advance();
    auto id = std::make_unique<Node>(NodeKind::Name, SourceRange::between(name.start, name.stop));
    id->text = std::string(name.text);
    id->ctx = ExprContext::Store;
    n->children.push_back(std::move(id));
    n->children.push_back(at_op("[") ? type_params() : nullptr);
    expect_op("=");
    n->children.push_back(expression());
    finish(*n);
    return n;
  }

  NodePtr type_params() {
    const SourcePosition start = expect_op("[").start;
    auto seq = make(NodeKind::Seq, start);
    while (!at_op("]")) {
      const SourcePosition pstart = peek().start;
      std::string prefix;
      if (at_op("*") || at_op("**")) prefix = std::string(advance().text);
      auto p = std::make_unique<Node>(NodeKind::TypeParam, SourceRange{});
      p->text = prefix + std::string(expect_identifier().text);
      p->children.push_back(nullptr);
      p->children.push_back(nullptr);
      if (at_op(":")) {
        advance();
        p->children[0] = expression();
      }
      if (at_op("=")) {
        advance();
        p->children[1] = at_op("*") ? star_expression() : expression();
      }
      p->range = SourceRange::between(pstart, prev().stop);
      seq->children.push_back(std::move(p));
      if (!at_op(",")) break;
      advance();
    }
    expect_op("]");
    finish(*seq);
    return seq;
  }

  NodePtr if_statement() {
    const SourcePosition start = advance().start;
    auto n = make(NodeKind::If, start);
    n->children.push_back(named_expression());
    expect_op(":");
    n->children.push_back(block());
    if (at_kw("elif")) {
      NodePtr elif = if_statement();
      elif->is_elif = true;
      n->children.push_back(block_of(std::move(elif)));
    } else if (at_kw("else")) {
      advance();
      expect_op(":");
      n->children.push_back(block());
    }
    finish(*n);
    return n;
  }

  NodePtr while_statement() {
    const SourcePosition start = advance().start;
    auto n = make(NodeKind::While, start);
    n->children.push_back(named_expression());
    expect_op(":");
    n->children.push_back(block());
    if (at_kw("else")) {
      advance();
      expect_op(":");
      n->children.push_back(block());
    }
    finish(*n);
    return n;
  }

  NodePtr for_statement(SourcePosition start, bool is_async) {
    expect_kw("for");
    auto n = make(NodeKind::For, start);
    n->is_async = is_async;
    n->children.push_back(target_list());
    expect_kw("in");
    n->children.push_back(star_expressions());
    expect_op(":");
    n->children.push_back(block());
    if (at_kw("else")) {
      advance();
      expect_op(":");
      n->children.push_back(block());
    }
    finish(*n);
    return n;
  }

  NodePtr try_statement() {
    const SourcePosition start = advance().start;
    expect_op(":");
    auto n = make(NodeKind::Try, start);
    n->children.push_back(block());
    auto handlers = std::make_unique<Node>(NodeKind::Seq, SourceRange{});
    while (at_kw("except")) {
      const SourcePosition hstart = advance().start;
      auto h = make(NodeKind::ExceptHandler, hstart);
      if (at_op("*")) {
        advance();
        h->aux = "*";
      }
      h->children.push_back(nullptr);
      if (!at_op(":")) {
        h->children[0] = expression();
        if (at_op(",")) error(peek(), "multiple exception types must be parenthesized");
        if (at_kw("as")) {
          advance();
          h->text = std::string(expect_identifier().text);
        }
      }
      expect_op(":");
      h->children.push_back(block());
      finish(*h);
      handlers->children.push_back(std::move(h));
    }
    if (!handlers->children.empty()) {
      handlers->range = SourceRange::between(handlers->children.front()->range.start(),
                                             handlers->children.back()->range.end());
    }
    n->children.push_back(std::move(handlers));
    n->children.push_back(nullptr);
    n->children.push_back(nullptr);
    if (at_kw("else")) {
      if (n->children[1]->children.empty()) error(peek(), "expected 'except' or 'finally' block");
      advance();
      expect_op(":");
      n->children[2] = block();
    }
    if (at_kw("finally")) {
      advance();
      expect_op(":");
      n->children[3] = block();
    }
    if (n->children[1]->children.empty() && !n->children[3]) {
      error(peek(), "expected 'except' or 'finally' block");
    }
    finish(*n);
    return n;
  }

  NodePtr with_item() {
    const SourcePosition start = peek().start;
    auto item = make(NodeKind::WithItem, start);
    item->children.push_back(expression());
    if (at_kw("as")) {
      advance();
      NodePtr target = star_target();
      set_context(*target, ExprContext::Store);
      item->children.push_back(std::move(target));
    }
    finish(*item);
    return item;
  }

  NodePtr with_statement(SourcePosition start, bool is_async) {
    expect_kw("with");
    auto n = make(NodeKind::With, start);
    n->is_async = is_async;
    auto items = make(NodeKind::Seq, peek().start);
    bool done = false;
    if (at_op("(")) {
      const std::size_t save = pos_;
      try {
        advance();
        std::vector<NodePtr> parsed;
        while (true) {
          parsed.push_back(with_item());
          if (!at_op(",")) break;
          advance();
          if (at_op(")")) break;
        }
        expect_op(")");
        if (at_op(":")) {
          items->children = std::move(parsed);
          done = true;
        }
      } catch (const ParseError&) {
      }
      if (!done) pos_ = save;
    }
    if (!done) {
      do {
        if (!items->children.empty()) advance();
        items->children.push_back(with_item());
      } while (at_op(","));
    }
    finish(*items);
    n->children.push_back(std::move(items));
    expect_op(":");
    n->children.push_back(block());
    finish(*n);
    return n;
  }

  NodePtr decorated() {
    const SourcePosition start = peek().start;
    auto decorators = make(NodeKind::Seq, start);
    while (at_op("@")) {
      advance();
      decorators->children.push_back(named_expression());
      expect_newline();
    }
    finish(*decorators);
    if (at_kw("def")) return function_def(start, std::move(decorators), false);
    if (at_kw("async")) {
      advance();
      return function_def(start, std::move(decorators), true);
    }
    if (at_kw("class")) return class_def(start, std::move(decorators));
    error(peek(), "expected function or class after decorator");
  }

  NodePtr function_def(SourcePosition start, NodePtr decorators, bool is_async) {
    expect_kw("def");
    auto n = make(NodeKind::FunctionDef, start);
    n->is_async = is_async;
    n->text = std::string(expect_identifier().text);
    if (!decorators) decorators = std::make_unique<Node>(NodeKind::Seq, SourceRange{});
    NodePtr tparams = at_op("[") ? type_params() : nullptr;
    expect_op("(");
    NodePtr args = parameters(")", true);
    expect_op(")");
    NodePtr returns;
    if (at_op("->")) {
      advance();
      returns = expression();
    }
    expect_op(":");
    n->children.push_back(std::move(decorators));
    n->children.push_back(std::move(args));
    n->children.push_back(std::move(returns));
    n->children.push_back(block());
    n->children.push_back(std::move(tparams));
    finish(*n);
    return n;
  }

  NodePtr class_def(SourcePosition start, NodePtr decorators) {
    expect_kw("class");
    auto n = make(NodeKind::ClassDef, start);
    n->text = std::string(expect_identifier().text);
    if (!decorators) decorators = std::make_unique<Node>(NodeKind::Seq, SourceRange{});
    NodePtr tparams = at_op("[") ? type_params() : nullptr;
    auto bases = make(NodeKind::Seq, peek().start);
    if (at_op("(")) {
      const SourcePosition open = advance().start;
      call_arguments(bases->children, open);
      expect_op(")");
      finish(*bases);
    }
    expect_op(":");
    n->children.push_back(std::move(decorators));
    n->children.push_back(std::move(bases));
    n->children.push_back(block());
    n->children.push_back(std::move(tparams));
    finish(*n);
    return n;
  }

  NodePtr parameters(std::string_view closer, bool annotations) {
    auto args = make(NodeKind::Arguments, peek().start);
    bool seen_star = false;
    bool seen_kwarg = false;
    bool seen_default = false;
    while (!at_op(closer)) {
      if (seen_kwarg) error(peek(), "arguments cannot follow var-keyword argument");
      const SourcePosition pstart = peek().start;
      if (at_op("/")) {
        advance();
        if (seen_star || args->children.empty()) error(prev(), "invalid syntax at '/'");
        for (auto& a : args->children) {
          if (a->aux == "normal") a->aux = "posonly";
        }
      } else if (at_op("*") || at_op("**")) {
        const bool double_star = advance().text == "**";
        if (!double_star && (at_op(",") || at_op(closer))) {
          if (seen_star) error(prev(), "* argument may appear only once");
          seen_star = true;
        } else {
          auto a = std::make_unique<Node>(NodeKind::Arg, SourceRange{});
          a->text = std::string(expect_identifier().text);
          a->aux = double_star ? "kwarg" : "vararg";
          a->children.push_back(nullptr);
          a->children.push_back(nullptr);
          if (annotations && at_op(":")) {
            advance();
            a->children[0] = double_star ? expression() : star_expression();
          }
          a->range = SourceRange::between(pstart, prev().stop);
          if (double_star) {
            seen_kwarg = true;
          } else {
            if (seen_star) error(prev(), "* argument may appear only once");
            seen_star = true;
          }
          args->children.push_back(std::move(a));
        }
      } else {
        auto a = std::make_unique<Node>(NodeKind::Arg, SourceRange{});
        a->text = std::string(expect_identifier().text);
        a->aux = seen_star ? "kwonly" : "normal";
        a->children.push_back(nullptr);
        a->children.push_back(nullptr);
        if (annotations && at_op(":")) {
          advance();
          a->children[0] = expression();
        }
        if (at_op("=")) {
          advance();
          a->children[1] = expression();
          if (!seen_star) seen_default = true;
        } else if (seen_default && !seen_star) {
          error(prev(), "non-default argument follows default argument");
        }
        a->range = SourceRange::between(pstart, prev().stop);
        args->children.push_back(std::move(a));
      }
      if (!at_op(",")) break;
      advance();
    }
    finish(*args);
    return args;
  }

  // ---- match statement ----------------------------------------------------

  NodePtr try_match_statement() {
    const std::size_t save = pos_;
    const SourcePosition start = peek().start;
    NodePtr subject;
    try {
      advance();
      if (!can_start_expression()) throw ParseError(path_, start, "not a match statement");
      NodePtr first = star_named_expression();
      if (at_op(",")) {
        auto tuple = make_span(NodeKind::Tuple, *first, *first);
        tuple->children.push_back(std::move(first));
        while (at_op(",")) {
          advance();
          if (at_op(":")) break;
          tuple->children.push_back(star_named_expression());
        }
        finish(*tuple);
        first = std::move(tuple);
      }
      expect_op(":");
      expect_newline();
      if (!at(TokenType::Indent) || !at_kw("case", 1)) {
        throw ParseError(path_, start, "not a match statement");
      }
      subject = std::move(first);
    } catch (const ParseError&) {
      pos_ = save;
      return nullptr;
    }
    advance();  // INDENT
    auto n = make(NodeKind::Match, start);
    n->children.push_back(std::move(subject));
    while (at_kw("case")) {
      const SourcePosition cstart = advance().start;
      auto c = make(NodeKind::MatchCase, cstart);
      c->children.push_back(open_sequence_pattern());
      c->children.push_back(nullptr);
      if (at_kw("if")) {
        advance();
        c->children[1] = named_expression();
      }
      expect_op(":");
      c->children.push_back(block());
      finish(*c);
      n->children.push_back(std::move(c));
    }
    if (!at(TokenType::Dedent)) error(peek(), "expected 'case' block");
    advance();
    finish(*n);
    return n;
  }

  NodePtr pattern_node(std::string_view subtype, SourcePosition start) const {
    auto p = make(NodeKind::Pattern, start);
    p->aux = std::string(subtype);
    return p;
  }

  NodePtr capture_name(const Token& tok) const {
    auto id = std::make_unique<Node>(NodeKind::Name, SourceRange::between(tok.start, tok.stop));
    id->text = std::string(tok.text);
    id->ctx = ExprContext::Store;
    return id;
  }

  NodePtr open_sequence_pattern() {
    const SourcePosition start = peek().start;
    NodePtr first = maybe_star_pattern();
    if (!at_op(",")) return first;
    auto seq = pattern_node("sequence", start);
    seq->children.push_back(std::move(first));
    while (at_op(",")) {
      advance();
      if (at_op(":") || at_kw("if")) break;
      seq->children.push_back(maybe_star_pattern());
    }
    finish(*seq);
    return seq;
  }

  NodePtr maybe_star_pattern() {
    if (at_op("*")) {
      const SourcePosition start = advance().start;
      auto p = pattern_node("star", start);
      const Token& name = expect_identifier();
      if (name.text != "_") p->children.push_back(capture_name(name));
      finish(*p);
      return p;
    }
    return as_pattern();
  }

  NodePtr as_pattern() {
    const SourcePosition start = peek().start;
    NodePtr p = or_pattern();
    if (at_kw("as")) {
      advance();
      auto as = pattern_node("as", start);
      as->children.push_back(std::move(p));
      as->children.push_back(capture_name(expect_identifier()));
      finish(*as);
      return as;
    }
    return p;
  }

  NodePtr or_pattern() {
    const SourcePosition start = peek().start;
    NodePtr first = closed_pattern();
    if (!at_op("|")) return first;
    auto alt = pattern_node("or", start);
    alt->children.push_back(std::move(first));
    while (at_op("|")) {
      advance();
      alt->children.push_back(closed_pattern());
    }
    finish(*alt);
    return alt;
  }

  NodePtr closed_pattern() {
    const SourcePosition start = peek().start;
    if (at(TokenType::Number) || at_op("-") || at(TokenType::String) || at_kw("None") ||
        at_kw("True") || at_kw("False")) {
      auto p = pattern_node("value", start);
      p->children.push_back(sum());
      finish(*p);
      return p;
    }
    if (at_identifier()) {
      const Token& name = peek();
      if (!at_op(".", 1) && !at_op("(", 1)) {
        advance();
        auto p = pattern_node(name.text == "_" ? "wildcard" : "capture", start);
        if (name.text != "_") p->children.push_back(capture_name(name));
        finish(*p);
        return p;
      }
      NodePtr value = name_atom(advance());
      while (at_op(".")) {
        advance();
        auto attr = make(NodeKind::Attribute, value->range.start());
        const Token& a = expect_identifier();
        attr->text = std::string(a.text);
        finish(*attr);
        attr->children.push_back(std::move(value));
        value = std::move(attr);
      }
      if (!at_op("(")) {
        auto p = pattern_node("value", start);
        p->children.push_back(std::move(value));
        finish(*p);
        return p;
      }
      advance();
      auto p = pattern_node("class", start);
      p->children.push_back(std::move(value));
      while (!at_op(")")) {
        if (at_identifier() && at_op("=", 1)) {
          const SourcePosition kstart = peek().start;
          auto kw = pattern_node("keyword", kstart);
          kw->text = std::string(advance().text);
          advance();
          kw->children.push_back(as_pattern());
          finish(*kw);
          p->children.push_back(std::move(kw));
        } else {
          p->children.push_back(as_pattern());
        }
        if (!at_op(",")) break;
        advance();
      }
      expect_op(")");
      finish(*p);
      return p;
    }
    if (at_op("(") || at_op("[")) {
      const bool paren = advance().text == "(";
      const std::string_view closer = paren ? ")" : "]";
      auto seq = pattern_node("sequence", start);
      bool saw_comma = false;
      while (!at_op(closer)) {
        seq->children.push_back(maybe_star_pattern());
        if (!at_op(",")) break;
        saw_comma = true;
        advance();
      }
      expect_op(closer);
      if (paren && !saw_comma && seq->children.size() == 1 && !seq->children[0]->aux.empty() &&
          seq->children[0]->aux != "star") {
        NodePtr inner = std::move(seq->children[0]);
        inner->parenthesized = true;
        return inner;
      }
      finish(*seq);
      return seq;
    }
    if (at_op("{")) {
      advance();
      auto map = pattern_node("mapping", start);
      while (!at_op("}")) {
        if (at_op("**")) {
          const SourcePosition dstart = advance().start;
          auto rest = pattern_node("double_star", dstart);
          rest->children.push_back(capture_name(expect_identifier()));
          finish(*rest);
          map->children.push_back(std::move(rest));
        } else {
          map->children.push_back(sum());
          expect_op(":");
          map->children.push_back(as_pattern());
        }
        if (!at_op(",")) break;
        advance();
      }
      expect_op("}");
      finish(*map);
      return map;
    }
    error(peek(), describe_unexpected("invalid pattern"));
  }

  // ---- expressions --------------------------------------------------------

  NodePtr star_expressions() {
    NodePtr first = star_expression();
    if (!at_op(",")) return first;
    auto tuple = make_span(NodeKind::Tuple, *first, *first);
    tuple->children.push_back(std::move(first));
    while (at_op(",")) {
      advance();
      if (!can_start_expression()) break;
      tuple->children.push_back(star_expression());
    }
    finish(*tuple);
    return tuple;
  }

  NodePtr star_expression() {
    if (at_op("*")) {
      const SourcePosition start = advance().start;
      auto n = make(NodeKind::Starred, start);
      n->children.push_back(bitwise_or());
      finish(*n);
      return n;
    }
    return expression();
  }

  NodePtr star_named_expression() {
    if (at_op("*")) return star_expression();
    return named_expression();
  }

  NodePtr named_expression() {
    if (at_identifier() && at_op(":=", 1)) {
      const Token& name = advance();
      advance();
      auto n =
          std::make_unique<Node>(NodeKind::NamedExpr, SourceRange::between(name.start, name.stop));
      auto target = name_atom(name);
      target->ctx = ExprContext::Store;
      n->children.push_back(std::move(target));
      n->children.push_back(expression());
      finish(*n);
      return n;
    }
    return expression();
  }

  NodePtr expression() {
    if (at_kw("lambda")) return lambda_def();
    NodePtr body = disjunction();
    if (!at_kw("if")) return body;
    advance();
    auto n = make_span(NodeKind::IfExp, *body, *body);
    n->children.push_back(std::move(body));
    n->children.push_back(disjunction());
    expect_kw("else");
    n->children.push_back(expression());
    finish(*n);
    return n;
  }

  NodePtr lambda_def() {
    const SourcePosition start = advance().start;
    auto n = make(NodeKind::Lambda, start);
    n->children.push_back(parameters(":", false));
    expect_op(":");
    n->children.push_back(expression());
    finish(*n);
    return n;
  }

  NodePtr bool_chain(std::string_view op, NodePtr (Parser::*next)()) {
    NodePtr first = (this->*next)();
    if (!at_kw(op)) return first;
    auto n = make_span(NodeKind::BoolOp, *first, *first);
    n->text = std::string(op);
    n->children.push_back(std::move(first));
    while (at_kw(op)) {
      advance();
      n->children.push_back((this->*next)());
    }
    finish(*n);
    return n;
  }

  NodePtr disjunction() { return bool_chain("or", &Parser::conjunction); }
  NodePtr conjunction() { return bool_chain("and", &Parser::inversion); }

  NodePtr inversion() {
    if (at_kw("not")) {
      const SourcePosition start = advance().start;
      auto n = make(NodeKind::UnaryOp, start);
      n->text = "not";
      n->children.push_back(inversion());
      finish(*n);
      return n;
    }
    return comparison();
  }

  bool at_comparison_op(std::string& op) {
    const Token& t = peek();
    if (t.type == TokenType::Op && (t.text == "==" || t.text == "!=" || t.text == "<" ||
                                    t.text == ">" || t.text == "<=" || t.text == ">=")) {
      op = std::string(t.text);
      return true;
    }
    if (at_kw("in")) {
      op = "in";
      return true;
    }
    if (at_kw("not") && at_kw("in", 1)) {
      op = "not in";
      return true;
    }
    if (at_kw("is")) {
      op = at_kw("not", 1) ? "is not" : "is";
      return true;
    }
    return false;
  }

  NodePtr comparison() {
    NodePtr left = bitwise_or();
    std::string op;
    if (!at_comparison_op(op)) return left;
    auto n = make_span(NodeKind::Compare, *left, *left);
    n->children.push_back(std::move(left));
    while (at_comparison_op(op)) {
      advance();
      if (op == "not in" || op == "is not") advance();
      n->ops.push_back(op);
      n->children.push_back(bitwise_or());
    }
    finish(*n);
    return n;
  }

  NodePtr binary_level(std::initializer_list<std::string_view> ops, NodePtr (Parser::*next)()) {
    NodePtr left = (this->*next)();
    while (peek().type == TokenType::Op &&
           std::find(ops.begin(), ops.end(), peek().text) != ops.end()) {
      const std::string op(advance().text);
      auto n = make_span(NodeKind::BinOp, *left, *left);
      n->text = op;
      n->children.push_back(std::move(left));
      n->children.push_back((this->*next)());
      finish(*n);
      left = std::move(n);
    }
    return left;
  }

  NodePtr bitwise_or() { return binary_level({"|"}, &Parser::bitwise_xor); }
  NodePtr bitwise_xor() { return binary_level({"^"}, &Parser::bitwise_and); }
  NodePtr bitwise_and() { return binary_level({"&"}, &Parser::shift_expr); }
  NodePtr shift_expr() { return binary_level({"<<", ">>"}, &Parser::sum); }
  NodePtr sum() { return binary_level({"+", "-"}, &Parser::term); }
  NodePtr term() { return binary_level({"*", "/", "//", "%", "@"}, &Parser::factor); }

  NodePtr factor() {
    if (at_op("+") || at_op("-") || at_op("~")) {
      const Token& op = advance();
      auto n = make(NodeKind::UnaryOp, op.start);
      n->text = std::string(op.text);
      n->children.push_back(factor());
      finish(*n);
      return n;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = await_primary();
    if (!at_op("**")) return base;
    advance();
    auto n = make_span(NodeKind::BinOp, *base, *base);
    n->text = "**";
    n->children.push_back(std::move(base));
    n->children.push_back(factor());
    finish(*n);
    return n;
  }

  NodePtr await_primary() {
    if (at_kw("await")) {
      const SourcePosition start = advance().start;
      auto n = make(NodeKind::Await, start);
      n->children.push_back(primary());
      finish(*n);
      return n;
    }
    return primary();
  }

  NodePtr primary() {
    NodePtr value = atom();
    while (true) {
      if (at_op(".")) {
        advance();
        auto n = make_span(NodeKind::Attribute, *value, *value);
        n->text = std::string(expect_identifier().text);
        n->children.push_back(std::move(value));
        finish(*n);
        value = std::move(n);
      } else if (at_op("(")) {
        const SourcePosition open = advance().start;
        auto n = make_span(NodeKind::Call, *value, *value);
        n->children.push_back(std::move(value));
        call_arguments(n->children, open);
        expect_op(")");
        finish(*n);
        value = std::move(n);
      } else if (at_op("[")) {
        advance();
        auto n = make_span(NodeKind::Subscript, *value, *value);
        n->children.push_back(std::move(value));
        n->children.push_back(slices());
        expect_op("]");
        finish(*n);
        value = std::move(n);
      } else {
        return value;
      }
    }
  }

  void call_arguments(std::vector<NodePtr>& out, SourcePosition open) {
    const std::size_t first_arg = out.size();
    bool seen_keyword = false;
    bool seen_double_star = false;
    while (!at_op(")")) {
      const SourcePosition start = peek().start;
      if (at_op("*")) {
        if (seen_double_star) {
          error(peek(), "iterable argument unpacking follows keyword argument unpacking");
        }
        advance();
        auto starred = make(NodeKind::Starred, start);
        starred->children.push_back(expression());
        finish(*starred);
        out.push_back(std::move(starred));
      } else if (at_op("**")) {
        advance();
        auto kw = make(NodeKind::Keyword, start);
        kw->children.push_back(expression());
        finish(*kw);
        out.push_back(std::move(kw));
        seen_keyword = true;
        seen_double_star = true;
      } else if (at_identifier() && at_op("=", 1)) {
        auto kw = make(NodeKind::Keyword, start);
        kw->text = std::string(advance().text);
        advance();
        kw->children.push_back(expression());
        finish(*kw);
        out.push_back(std::move(kw));
        seen_keyword = true;
      } else {
        if (seen_keyword) {
          error(peek(), "positional argument follows keyword argument");
        }
        NodePtr arg = named_expression();
        if (at_kw("for") || (at_kw("async") && at_kw("for", 1))) {
          arg = comprehension_tail(NodeKind::GeneratorExp, std::move(arg), nullptr);
          if (out.size() != first_arg || !at_op(")")) {
            error(peek(), "generator expression must be parenthesized");
          }
          // A sole generator argument borrows the call's parentheses.
          arg->range = SourceRange::between(open, peek().stop);
          arg->parenthesized = true;
          arg->paren_range = arg->range;
        }
        out.push_back(std::move(arg));
      }
      if (!at_op(",")) break;
      advance();
    }
  }

  NodePtr slices() {
    NodePtr first = slice_item();
    if (!at_op(",")) return first;
    auto tuple = make_span(NodeKind::Tuple, *first, *first);
    tuple->children.push_back(std::move(first));
    while (at_op(",")) {
      advance();
      if (at_op("]")) break;
      tuple->children.push_back(slice_item());
    }
    finish(*tuple);
    return tuple;
  }

  NodePtr slice_item() {
    const SourcePosition start = peek().start;
    if (at_op("*")) return star_expression();
    NodePtr lower;
    if (!at_op(":")) {
      lower = named_expression();
      if (!at_op(":")) return lower;
    }
    auto n = make(NodeKind::Slice, start);
    advance();  // ':'
    n->children.push_back(std::move(lower));
    n->children.push_back(nullptr);
    n->children.push_back(nullptr);
    if (!at_op(":") && !at_op(",") && !at_op("]")) n->children[1] = expression();
    if (at_op(":")) {
      advance();
      if (!at_op(",") && !at_op("]")) n->children[2] = expression();
    }
    finish(*n);
    return n;
  }

  NodePtr name_atom(const Token& tok) const {
    auto n = std::make_unique<Node>(NodeKind::Name, SourceRange::between(tok.start, tok.stop));
    n->text = std::string(tok.text);
    return n;
  }

  NodePtr constant(const Token& tok, std::string_view kind) const {
    auto n = std::make_unique<Node>(NodeKind::Constant, SourceRange::between(tok.start, tok.stop));
    n->text = std::string(tok.text);
    n->aux = std::string(kind);
    return n;
  }

  NodePtr atom() {
    const Token& tok = peek();
    switch (tok.type) {
      case TokenType::Name:
        if (tok.text == "True" || tok.text == "False" || tok.text == "None") {
          advance();
          return constant(tok, tok.text);
        }
        if (is_keyword(tok.text)) error(tok, describe_unexpected("invalid syntax"));
        advance();
        return name_atom(tok);
      case TokenType::Number: {
        advance();
        const char last =
            static_cast<char>(std::tolower(static_cast<unsigned char>(tok.text.back())));
        std::string_view kind = "int";
        if (last == 'j') {
          kind = "complex";
        } else if (tok.text.size() < 2 ||
                   std::tolower(static_cast<unsigned char>(tok.text[1])) != 'x') {
          if (tok.text.find_first_of(".eE") != std::string_view::npos) kind = "float";
        }
        return constant(tok, kind);
      }
      case TokenType::String:
        return strings();
      case TokenType::Op:
        if (tok.text == "(") return paren_atom();
        if (tok.text == "[") return list_atom();
        if (tok.text == "{") return brace_atom();
        if (tok.text == "...") {
          advance();
          return constant(tok, "Ellipsis");
        }
        break;
      default:
        break;
    }
    error(tok, describe_unexpected("invalid syntax"));
  }

  NodePtr strings() {
    const Token& first = peek();
    bool any_f = false;
    bool any_bytes = false;
    bool any_text = false;
    std::vector<const Token*> parts;
    while (at(TokenType::String)) {
      const Token& t = advance();
      any_f = any_f || t.is_fstring;
      (t.is_bytes ? any_bytes : any_text) = true;
      parts.push_back(&t);
    }
    if (any_bytes && any_text) error(first, "cannot mix bytes and nonbytes literals");
    const SourceRange range = SourceRange::between(first.start, prev().stop);
    const std::string literal(src_.substr(first.begin, prev().end - first.begin));
    if (!any_f) {
      auto n = std::make_unique<Node>(NodeKind::Constant, range);
      n->text = literal;
      n->aux = any_bytes ? "bytes" : "str";
      return n;
    }
    auto n = std::make_unique<Node>(NodeKind::JoinedStr, range);
    n->text = literal;
    for (const Token* t : parts) {
      for (const FStringField& f : t->fields) n->children.push_back(fstring_field(f));
    }
    return n;
  }

  NodePtr fstring_field(const FStringField& field) const {
    auto tokens = tokenize_fragment(src_, index_, path_, field.expr_begin, field.expr_end);
    Parser sub(src_, index_, path_, std::move(tokens));
    NodePtr value = sub.parse_fragment();
    auto fv = std::make_unique<Node>(NodeKind::FormattedValue, value->range);
    fv->children.push_back(std::move(value));
    for (const FStringField& nested : field.spec_fields) {
      fv->children.push_back(fstring_field(nested));
    }
    return fv;
  }

  NodePtr yield_expr() {
    const SourcePosition start = advance().start;
    if (at_kw("from")) {
      advance();
      auto n = make(NodeKind::YieldFrom, start);
      n->children.push_back(expression());
      finish(*n);
      return n;
    }
    auto n = make(NodeKind::Yield, start);
    if (can_start_expression()) n->children.push_back(star_expressions());
    finish(*n);
    return n;
  }

  NodePtr paren_atom() {
    const SourcePosition start = advance().start;
    if (at_op(")")) {
      advance();
      auto t = make(NodeKind::Tuple, start);
      mark_parens(*t, start);
      return t;
    }
    if (at_kw("yield")) {
      NodePtr y = yield_expr();
      expect_op(")");
      mark_parens(*y, start);
      return y;
    }
    NodePtr first = star_named_expression();
    if (at_kw("for") || (at_kw("async") && at_kw("for", 1))) {
      NodePtr gen = comprehension_tail(NodeKind::GeneratorExp, std::move(first), nullptr);
      expect_op(")");
      gen->range = SourceRange::between(start, prev().stop);
      mark_parens(*gen, start);
      return gen;
    }
    if (at_op(",")) {
      auto t = make(NodeKind::Tuple, start);
      t->children.push_back(std::move(first));
      while (at_op(",")) {
        advance();
        if (at_op(")")) break;
        t->children.push_back(star_named_expression());
      }
      expect_op(")");
      finish(*t);
      mark_parens(*t, start);
      return t;
    }
    expect_op(")");
    if (first->is(NodeKind::Starred)) {
      throw ParseError(path_, first->range.start(), "cannot use starred expression here");
    }
    mark_parens(*first, start);
    return first;
  }

  void mark_parens(Node& n, SourcePosition open) const {
    n.parenthesized = true;
    n.paren_range = SourceRange::between(open, prev().stop);
  }

  NodePtr list_atom() {
    const SourcePosition start = advance().start;
    if (at_op("]")) {
      advance();
      return make(NodeKind::List, start);
    }
    NodePtr first = star_named_expression();
    if (at_kw("for") || (at_kw("async") && at_kw("for", 1))) {
      NodePtr comp = comprehension_tail(NodeKind::ListComp, std::move(first), nullptr);
      expect_op("]");
      comp->range = SourceRange::between(start, prev().stop);
      return comp;
    }
    auto list = make(NodeKind::List, start);
    list->children.push_back(std::move(first));
    while (at_op(",")) {
      advance();
      if (at_op("]")) break;
      list->children.push_back(star_named_expression());
    }
    expect_op("]");
    finish(*list);
    return list;
  }

  NodePtr brace_atom() {
    const SourcePosition start = advance().start;
    if (at_op("}")) {
      advance();
      return make(NodeKind::Dict, start);
    }
    NodePtr first_item;
    if (at_op("**")) {
      const SourcePosition dstart = advance().start;
      first_item = make(NodeKind::DoubleStarred, dstart);
      first_item->children.push_back(bitwise_or());
      finish(*first_item);
    } else {
      NodePtr first = star_named_expression();
      if (!at_op(":")) {
        if (at_kw("for") || (at_kw("async") && at_kw("for", 1))) {
          NodePtr comp = comprehension_tail(NodeKind::SetComp, std::move(first), nullptr);
          expect_op("}");
          comp->range = SourceRange::between(start, prev().stop);
          return comp;
        }
        auto set = make(NodeKind::Set, start);
        set->children.push_back(std::move(first));
        while (at_op(",")) {
          advance();
          if (at_op("}")) break;
          set->children.push_back(star_named_expression());
        }
        expect_op("}");
        finish(*set);
        return set;
      }
      advance();
      NodePtr value = expression();
      if (at_kw("for") || (at_kw("async") && at_kw("for", 1))) {
        NodePtr comp = comprehension_tail(NodeKind::DictComp, std::move(first), std::move(value));
        expect_op("}");
        comp->range = SourceRange::between(start, prev().stop);
        return comp;
      }
      first_item = make_span(NodeKind::KeyValue, *first, *value);
      first_item->children.push_back(std::move(first));
      first_item->children.push_back(std::move(value));
    }
    auto dict = make(NodeKind::Dict, start);
    dict->children.push_back(std::move(first_item));
    while (at_op(",")) {
      advance();
      if (at_op("}")) break;
      if (at_op("**")) {
        const SourcePosition dstart = advance().start;
        auto d = make(NodeKind::DoubleStarred, dstart);
        d->children.push_back(bitwise_or());
        finish(*d);
        dict->children.push_back(std::move(d));
      } else {
        NodePtr key = expression();
        expect_op(":");
        NodePtr value = expression();
        auto kv = make_span(NodeKind::KeyValue, *key, *value);
        kv->children.push_back(std::move(key));
        kv->children.push_back(std::move(value));
        dict->children.push_back(std::move(kv));
      }
    }
    expect_op("}");
    finish(*dict);
    return dict;
  }

  NodePtr comprehension_tail(NodeKind kind, NodePtr elt, NodePtr value) {
    auto n = make_span(kind, *elt, *elt);
    n->children.push_back(std::move(elt));
    if (value) n->children.push_back(std::move(value));
    while (at_kw("for") || (at_kw("async") && at_kw("for", 1))) {
      const SourcePosition start = peek().start;
      const bool is_async = at_kw("async");
      if (is_async) advance();
      advance();
      auto comp = make(NodeKind::Comprehension, start);
      comp->is_async = is_async;
      comp->children.push_back(target_list());
      expect_kw("in");
      comp->children.push_back(disjunction());
      while (at_kw("if")) {
        advance();
        comp->children.push_back(disjunction());
      }
      finish(*comp);
      n->children.push_back(std::move(comp));
    }
    finish(*n);
    return n;
  }

  // Targets of `for` loops and comprehensions: star_targets stopping at `in`.
  NodePtr target_list() {
    NodePtr first = star_target();
    if (!at_op(",")) {
      set_context(*first, ExprContext::Store);
      return first;
    }
    auto tuple = make_span(NodeKind::Tuple, *first, *first);
    tuple->children.push_back(std::move(first));
    while (at_op(",")) {
      advance();
      if (at_kw("in")) break;
      tuple->children.push_back(star_target());
    }
    finish(*tuple);
    set_context(*tuple, ExprContext::Store);
    return tuple;
  }

  NodePtr star_target() {
    if (at_op("*")) {
      const SourcePosition start = advance().start;
      auto n = make(NodeKind::Starred, start);
      n->children.push_back(star_target());
      finish(*n);
      return n;
    }
    return bitwise_or();
  }

  std::string_view src_;
  const LineIndex& index_;
  const std::string& path_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

NodePtr parse_module(std::string_view text, const LineIndex& index, const std::string& path) {
  Parser parser(text, index, path, tokenize(text, index, path));
  NodePtr module = parser.parse_file();
  link_parents(*module);
  return module;
}

NodePtr parse_expression_fragment(std::string_view text, const LineIndex& index,
                                  const std::string& path, std::size_t begin, std::size_t end) {
  Parser parser(text, index, path, tokenize_fragment(text, index, path, begin, end));
  NodePtr expr = parser.parse_fragment();
  link_parents(*expr);
  return expr;
}

}  // namespace smellscan
