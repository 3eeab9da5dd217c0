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

#ifndef SMELLSCAN_TOKENIZER_HPP_
#define SMELLSCAN_TOKENIZER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "smellscan/source.hpp"

namespace smellscan {

enum class TokenType { Name, Number, String, Op, Newline, Indent, Dedent, EndMarker };

// One `{...}` replacement field inside an f-string. Offsets index the file.
struct FStringField {
  std::size_t expr_begin = 0;
  std::size_t expr_end = 0;
  std::vector<FStringField> spec_fields;
};

struct Token {
  TokenType type = TokenType::EndMarker;
  std::string_view text;
  std::size_t begin = 0;
  std::size_t end = 0;
  SourcePosition start;
  SourcePosition stop;
  bool is_fstring = false;
  bool is_bytes = false;
  std::vector<FStringField> fields;
};

// Tokenizes a whole module, producing NEWLINE/INDENT/DEDENT layout tokens.
std::vector<Token> tokenize(std::string_view text, const LineIndex& index, const std::string& path);

// Tokenizes text[begin, end) as if it were enclosed in brackets: newlines are
// insignificant and no layout tokens are produced.
std::vector<Token> tokenize_fragment(std::string_view text, const LineIndex& index,
                                     const std::string& path, std::size_t begin, std::size_t end);

bool is_keyword(std::string_view word);

}  // namespace smellscan

#endif  // SMELLSCAN_TOKENIZER_HPP_
