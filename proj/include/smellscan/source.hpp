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

#ifndef SMELLSCAN_SOURCE_HPP_
#define SMELLSCAN_SOURCE_HPP_

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smellscan {

// Lines are 1-based, columns are 0-based byte offsets into the line.
struct SourcePosition {
  int line = 1;
  int col = 0;

  friend auto operator<=>(const SourcePosition&, const SourcePosition&) = default;
};

// Half-open on the column axis: end_col is one past the last byte.
struct SourceRange {
  int start_line = 1;
  int start_col = 0;
  int end_line = 1;
  int end_col = 0;

  SourcePosition start() const { return {start_line, start_col}; }
  SourcePosition end() const { return {end_line, end_col}; }

  static SourceRange between(SourcePosition from, SourcePosition to) {
    return {from.line, from.col, to.line, to.col};
  }

  bool contains(const SourceRange& other) const {
    return start() <= other.start() && other.end() <= end();
  }
  bool overlaps(const SourceRange& other) const {
    return start() < other.end() && other.start() < end();
  }

  friend bool operator==(const SourceRange&, const SourceRange&) = default;
};

// Maps between byte offsets and (line, col) positions.
class LineIndex {
 public:
  explicit LineIndex(std::string_view text);

  const std::vector<std::size_t>& offsets() const { return offsets_; }
  int line_count() const { return static_cast<int>(offsets_.size()); }
  std::size_t text_size() const { return size_; }

  std::size_t offset(SourcePosition pos) const;
  SourcePosition position(std::size_t offset) const;

 private:
  std::vector<std::size_t> offsets_;
  std::size_t size_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, SourcePosition where, std::string message);

  const std::string& path() const { return path_; }
  SourcePosition where() const { return where_; }
  const std::string& message() const { return message_; }

 private:
  std::string path_;
  SourcePosition where_;
  std::string message_;
};

}  // namespace smellscan

#endif  // SMELLSCAN_SOURCE_HPP_
