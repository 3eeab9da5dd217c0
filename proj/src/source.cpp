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

#include "smellscan/source.hpp"

#include <algorithm>

namespace smellscan {

LineIndex::LineIndex(std::string_view text) : size_(text.size()) {
  offsets_.push_back(0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      offsets_.push_back(i + 1);
    } else if (text[i] == '\r' && (i + 1 >= text.size() || text[i + 1] != '\n')) {
      offsets_.push_back(i + 1);
    }
  }
}

std::size_t LineIndex::offset(SourcePosition pos) const {
  const auto line = static_cast<std::size_t>(std::clamp(pos.line, 1, line_count()));
  return std::min(offsets_[line - 1] + static_cast<std::size_t>(std::max(pos.col, 0)), size_);
}

SourcePosition LineIndex::position(std::size_t offset) const {
  offset = std::min(offset, size_);
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), offset);
  const auto line = static_cast<int>(it - offsets_.begin());
  return {line, static_cast<int>(offset - offsets_[line - 1])};
}

ParseError::ParseError(std::string path, SourcePosition where, std::string message)
    : std::runtime_error(path + ":" + std::to_string(where.line) + ":" + std::to_string(where.col) +
                         ": " + message),
      path_(std::move(path)),
      where_(where),
      message_(std::move(message)) {}

}  // namespace smellscan
