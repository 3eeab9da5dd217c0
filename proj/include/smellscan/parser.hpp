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

#ifndef SMELLSCAN_PARSER_HPP_
#define SMELLSCAN_PARSER_HPP_

#include <string>
#include <string_view>

#include "smellscan/ast.hpp"
#include "smellscan/source.hpp"

namespace smellscan {

// Parses a complete Python 3 module. Throws ParseError on invalid input.
// Parent links are filled in on the returned tree.
NodePtr parse_module(std::string_view text, const LineIndex& index, const std::string& path);

// Parses text[begin, end) as one expression (a bare tuple is allowed), with
// implicit line joining. Positions refer to the whole text.
NodePtr parse_expression_fragment(std::string_view text, const LineIndex& index,
                                  const std::string& path, std::size_t begin, std::size_t end);

}  // namespace smellscan

#endif  // SMELLSCAN_PARSER_HPP_
