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

#include "smellscan/tokenizer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace smellscan {

namespace {

constexpr std::array<std::string_view, 35> kKeywords = {
    "False", "None",     "True",  "and",    "as",   "assert", "async",  "await",    "break",
    "class", "continue", "def",   "del",    "elif", "else",   "except", "finally",  "for",
    "from",  "global",   "if",    "import", "in",   "is",     "lambda", "nonlocal", "not",
    "or",    "pass",     "raise", "return", "try",  "while",  "with",   "yield"};

// Longest operators first so a greedy scan picks them.
constexpr std::array<std::string_view, 47> kOperators = {
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", "<<", ">>", "<=",
    ">=",  "==",  "!=",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "@=",
    "+",   "-",   "*",   "/",   "%",   "@",  "&",  "|",  "^",  "~",  "<",  ">",
    "(",   ")",   "[",   "]",   "{",   "}",  ",",  ":",  ";",  ".",  "="};

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

bool is_string_prefix(std::string_view word, bool& raw, bool& fstr, bool& bytes) {
  if (word.empty() || word.size() > 2) return false;
  raw = fstr = bytes = false;
  bool unicode = false;
  for (char ch : word) {
    switch (std::tolower(static_cast<unsigned char>(ch))) {
      case 'r':
        if (raw) return false;
        raw = true;
        break;
      case 'f':
        if (fstr) return false;
        fstr = true;
        break;
      case 'b':
        if (bytes) return false;
        bytes = true;
        break;
      case 'u':
        if (unicode) return false;
        unicode = true;
        break;
      default:
        return false;
    }
  }
  if (unicode && word.size() > 1) return false;
  if (fstr && bytes) return false;
  return true;
}

class Lexer {
 public:
  Lexer(std::string_view src, const LineIndex& index, const std::string& path, std::size_t begin,
        std::size_t end, bool fragment)
      : src_(src), index_(index), path_(path), pos_(begin), end_(end), fragment_(fragment) {}

  std::vector<Token> run() {
    while (true) {
      if (at_line_start_ && brackets_.empty() && !fragment_) {
        if (!handle_indentation()) break;
      }
      skip_blanks();
      if (pos_ >= end_) break;
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < end_ && src_[pos_] != '\n' && src_[pos_] != '\r') ++pos_;
        continue;
      }
      if (c == '\\') {
        std::size_t next = pos_ + 1;
        if (next < end_ && src_[next] == '\r') ++next;
        if (next < end_ && src_[next] == '\n') {
          pos_ = next + 1;
          continue;
        }
        if (next >= end_) fail(pos_, "unexpected EOF after line continuation");
        fail(pos_, "unexpected character after line continuation character");
      }
      if (c == '\n' || c == '\r') {
        const std::size_t start = pos_;
        if (c == '\r' && pos_ + 1 < end_ && src_[pos_ + 1] == '\n') ++pos_;
        ++pos_;
        if (!brackets_.empty() || fragment_) continue;
        emit(TokenType::Newline, start, start + 1);
        at_line_start_ = true;
        continue;
      }
      if (is_ident_start(static_cast<unsigned char>(c))) {
        lex_name();
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '.' && pos_ + 1 < end_ &&
           std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        lex_number();
        continue;
      }
      if (c == '"' || c == '\'') {
        lex_string(pos_, pos_, false, false, false);
        continue;
      }
      lex_operator();
    }
    if (!brackets_.empty() && !fragment_) {
      fail(bracket_pos_.back(), "'" + std::string(1, brackets_.back()) + "' was never closed");
    }
    if (!fragment_) {
      if (!out_.empty() && out_.back().type != TokenType::Newline &&
          out_.back().type != TokenType::Dedent) {
        emit(TokenType::Newline, end_, end_);
      }
      while (indents_.size() > 1) {
        indents_.pop_back();
        emit(TokenType::Dedent, end_, end_);
      }
    }
    emit(TokenType::EndMarker, end_, end_);
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& message) const {
    throw ParseError(path_, index_.position(std::min(at, index_.text_size())), message);
  }

  void emit(TokenType type, std::size_t begin, std::size_t end) {
    Token tok;
    tok.type = type;
    tok.begin = begin;
    tok.end = end;
    tok.text = src_.substr(begin, end - begin);
    tok.start = index_.position(begin);
    tok.stop = index_.position(end);
    out_.push_back(std::move(tok));
  }

  void skip_blanks() {
    while (pos_ < end_ && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\f')) {
      ++pos_;
    }
  }

  // Returns false at end of input.
  bool handle_indentation() {
    while (true) {
      int col = 0;
      std::size_t p = pos_;
      while (p < end_) {
        if (src_[p] == ' ') {
          ++col;
        } else if (src_[p] == '\t') {
          col = (col / 8 + 1) * 8;
        } else if (src_[p] == '\f') {
          col = 0;
        } else {
          break;
        }
        ++p;
      }
      if (p >= end_) {
        pos_ = p;
        return false;
      }
      const char c = src_[p];
      if (c == '#' || c == '\n' || c == '\r') {
        while (p < end_ && src_[p] != '\n' && src_[p] != '\r') ++p;
        if (p < end_ && src_[p] == '\r') ++p;
        if (p < end_ && src_[p] == '\n') ++p;
        pos_ = p;
        continue;
      }
      pos_ = p;
      at_line_start_ = false;
      if (col > indents_.back()) {
        indents_.push_back(col);
        emit(TokenType::Indent, p, p);
      } else {
        while (col < indents_.back()) {
          indents_.pop_back();
          emit(TokenType::Dedent, p, p);
        }
        if (col != indents_.back()) {
          fail(p, "unindent does not match any outer indentation level");
        }
      }
      return true;
    }
  }

  void lex_name() {
    const std::size_t start = pos_;
    while (pos_ < end_ && is_ident_char(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < end_ && (src_[pos_] == '"' || src_[pos_] == '\'')) {
      bool raw = false, fstr = false, bytes = false;
      if (is_string_prefix(src_.substr(start, pos_ - start), raw, fstr, bytes)) {
        lex_string(start, pos_, raw, fstr, bytes);
        return;
      }
    }
    emit(TokenType::Name, start, pos_);
  }

  void digits(bool (*accept)(char)) {
    bool last_underscore = false;
    while (pos_ < end_) {
      const char c = src_[pos_];
      if (c == '_') {
        if (last_underscore) fail(pos_, "invalid decimal literal");
        last_underscore = true;
        ++pos_;
      } else if (accept(c)) {
        last_underscore = false;
        ++pos_;
      } else {
        break;
      }
    }
    if (last_underscore) fail(pos_ - 1, "invalid decimal literal");
  }

  void lex_number() {
    const std::size_t start = pos_;
    auto dec = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    if (src_[pos_] == '0' && pos_ + 1 < end_ &&
        std::string_view("xXoObB").find(src_[pos_ + 1]) != std::string_view::npos) {
      const char base = static_cast<char>(std::tolower(static_cast<unsigned char>(src_[pos_ + 1])));
      pos_ += 2;
      if (pos_ < end_ && src_[pos_] == '_') ++pos_;
      const std::size_t digits_start = pos_;
      if (base == 'x') {
        digits([](char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; });
      } else if (base == 'o') {
        digits([](char c) { return c >= '0' && c <= '7'; });
      } else {
        digits([](char c) { return c == '0' || c == '1'; });
      }
      if (pos_ == digits_start) fail(start, "invalid number literal");
      if (pos_ < end_ && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        fail(pos_, "invalid digit in number literal");
      }
      emit(TokenType::Number, start, pos_);
      return;
    }
    bool is_int = true;
    if (src_[pos_] != '.') digits(+dec);
    const std::string_view int_part = src_.substr(start, pos_ - start);
    if (pos_ < end_ && src_[pos_] == '.') {
      is_int = false;
      ++pos_;
      if (pos_ < end_ && dec(src_[pos_])) digits(+dec);
    }
    if (pos_ < end_ && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < end_ && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < end_ && dec(src_[p])) {
        is_int = false;
        pos_ = p;
        digits(+dec);
      }
    }
    if (pos_ < end_ && (src_[pos_] == 'j' || src_[pos_] == 'J')) {
      is_int = false;
      ++pos_;
    }
    if (is_int && int_part.size() > 1 && int_part[0] == '0' &&
        int_part.find_first_not_of("0_") != std::string_view::npos) {
      fail(start, "leading zeros in decimal integer literals are not permitted");
    }
    emit(TokenType::Number, start, pos_);
  }

  // Scans a string body starting at the opening quote. Returns one past the
  // closing quote; replacement fields of f-strings are appended to `fields`.
  std::size_t scan_string(std::size_t quote_pos, bool raw, bool fstr,
                          std::vector<FStringField>* fields) {
    const char q = src_[quote_pos];
    const bool triple =
        quote_pos + 2 < end_ && src_[quote_pos + 1] == q && src_[quote_pos + 2] == q;
    std::size_t p = quote_pos + (triple ? 3 : 1);
    while (true) {
      if (p >= end_) fail(quote_pos, "unterminated string literal");
      const char c = src_[p];
      if (c == '\\') {
        if (p + 1 >= end_) fail(quote_pos, "unterminated string literal");
        const char n = src_[p + 1];
        if (fstr && !raw && n == 'N' && p + 2 < end_ && src_[p + 2] == '{') {
          const std::size_t close = src_.find('}', p + 3);
          if (close == std::string_view::npos || close >= end_) {
            fail(p, "malformed \\N character escape");
          }
          p = close + 1;
          continue;
        }
        if (fstr && (n == '{' || n == '}')) {
          ++p;
          continue;
        }
        p += 2;
        if (n == '\r' && p < end_ && src_[p] == '\n') ++p;
        continue;
      }
      if (c == '\n' || c == '\r') {
        if (!triple) fail(quote_pos, "unterminated string literal");
        ++p;
        continue;
      }
      if (c == q) {
        if (!triple) return p + 1;
        if (p + 2 < end_ && src_[p + 1] == q && src_[p + 2] == q) return p + 3;
        ++p;
        continue;
      }
      if (fstr && c == '{') {
        if (p + 1 < end_ && src_[p + 1] == '{') {
          p += 2;
          continue;
        }
        FStringField field;
        p = scan_field(p + 1, field);
        if (fields != nullptr) fields->push_back(std::move(field));
        continue;
      }
      if (fstr && c == '}') {
        if (p + 1 < end_ && src_[p + 1] == '}') {
          p += 2;
          continue;
        }
        fail(p, "f-string: single '}' is not allowed");
      }
      ++p;
    }
  }

  // Scans one replacement field; `p` is just past its `{`. Returns one past
  // the closing `}`.
  std::size_t scan_field(std::size_t p, FStringField& field) {
    field.expr_begin = p;
    bool have_end = false;
    int depth = 0;
    while (true) {
      if (p >= end_) fail(field.expr_begin, "f-string: expecting '}'");
      const char c = src_[p];
      if (c == '"' || c == '\'') {
        // Nested string; look back for a prefix to learn if it is an f-string.
        std::size_t q = p;
        while (q > field.expr_begin && is_ident_char(static_cast<unsigned char>(src_[q - 1]))) {
          --q;
        }
        bool raw = false, fstr = false, bytes = false;
        if (q == p || !is_string_prefix(src_.substr(q, p - q), raw, fstr, bytes)) {
          raw = fstr = bytes = false;
        }
        p = scan_string(p, raw, fstr, nullptr);
        continue;
      }
      if (c == '(' || c == '[' || c == '{') {
        ++depth;
        ++p;
        continue;
      }
      if (c == ')' || c == ']') {
        --depth;
        ++p;
        continue;
      }
      if (c == '}') {
        if (depth > 0) {
          --depth;
          ++p;
          continue;
        }
        if (!have_end) field.expr_end = p;
        return p + 1;
      }
      if (depth == 0 && c == '!' && p + 1 < end_ && src_[p + 1] != '=') {
        if (!have_end) field.expr_end = p;
        have_end = true;
        p += 2;
        continue;
      }
      if (depth == 0 && c == '=' && !have_end) {
        const bool op_follows = p + 1 < end_ && src_[p + 1] == '=';
        const bool op_precedes = p > field.expr_begin && std::string_view("=!<>").find(
                                                             src_[p - 1]) != std::string_view::npos;
        if (op_follows) {
          p += 2;
          continue;
        }
        if (!op_precedes) {
          field.expr_end = p;
          have_end = true;
        }
        ++p;
        continue;
      }
      if (depth == 0 && c == ':') {
        if (!have_end) field.expr_end = p;
        return scan_format_spec(p + 1, field);
      }
      ++p;
    }
  }

  std::size_t scan_format_spec(std::size_t p, FStringField& field) {
    while (true) {
      if (p >= end_) fail(field.expr_begin, "f-string: expecting '}'");
      const char c = src_[p];
      if (c == '{') {
        FStringField nested;
        p = scan_field(p + 1, nested);
        field.spec_fields.push_back(std::move(nested));
        continue;
      }
      if (c == '}') return p + 1;
      ++p;
    }
  }

  void lex_string(std::size_t start, std::size_t quote_pos, bool raw, bool fstr, bool bytes) {
    std::vector<FStringField> fields;
    pos_ = scan_string(quote_pos, raw, fstr, &fields);
    emit(TokenType::String, start, pos_);
    out_.back().is_fstring = fstr;
    out_.back().is_bytes = bytes;
    out_.back().fields = std::move(fields);
  }

  void lex_operator() {
    const std::string_view rest = src_.substr(pos_, end_ - pos_);
    for (std::string_view op : kOperators) {
      if (rest.substr(0, op.size()) != op) continue;
      const std::size_t start = pos_;
      if (op == "(" || op == "[" || op == "{") {
        brackets_.push_back(op[0]);
        bracket_pos_.push_back(start);
      } else if (op == ")" || op == "]" || op == "}") {
        const char want = op == ")" ? '(' : op == "]" ? '[' : '{';
        if (brackets_.empty()) {
          if (fragment_) fail(start, "unmatched '" + std::string(op) + "'");
          fail(start, "unmatched '" + std::string(op) + "'");
        }
        if (brackets_.back() != want) {
          fail(start, "closing parenthesis '" + std::string(op) +
                          "' does not match opening parenthesis '" +
                          std::string(1, brackets_.back()) + "'");
        }
        brackets_.pop_back();
        bracket_pos_.pop_back();
      }
      pos_ += op.size();
      emit(TokenType::Op, start, pos_);
      return;
    }
    if (src_[pos_] == '!') fail(pos_, "invalid syntax");
    fail(pos_, "invalid character '" + std::string(1, src_[pos_]) + "'");
  }

  std::string_view src_;
  const LineIndex& index_;
  const std::string& path_;
  std::size_t pos_;
  std::size_t end_;
  bool fragment_;
  bool at_line_start_ = true;
  std::vector<int> indents_{0};
  std::vector<char> brackets_;
  std::vector<std::size_t> bracket_pos_;
  std::vector<Token> out_;
};

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view text, const LineIndex& index,
                            const std::string& path) {
  return Lexer(text, index, path, 0, text.size(), false).run();
}

std::vector<Token> tokenize_fragment(std::string_view text, const LineIndex& index,
                                     const std::string& path, std::size_t begin, std::size_t end) {
  return Lexer(text, index, path, begin, end, true).run();
}

}  // namespace smellscan
