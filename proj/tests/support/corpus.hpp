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

// Synthetic source trees assembled from the golden before-snippets.

#ifndef SMELLSCAN_TESTS_SUPPORT_CORPUS_HPP_
#define SMELLSCAN_TESTS_SUPPORT_CORPUS_HPP_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "support/golden.hpp"

namespace smellscan::testing {

// Writes `files` Python files under `root` in nested packages. Every 50th
// file is malformed. Content depends only on `seed`.
inline void write_synthetic_corpus(const std::filesystem::path& root, std::size_t files,
                                   unsigned seed) {
  std::vector<std::string> snippets;
  for (const GoldenPair& p : golden_pairs()) {
    snippets.push_back(read_file(data_path("golden/" + p.stem + ".before.py")));
  }
  snippets.push_back("def helper(a, b):\n    return a + b\n");
  snippets.push_back("# notes only\n\n\nVALUE = 3\n");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, snippets.size() - 1);
  std::uniform_int_distribution<int> count(1, 4);
  for (std::size_t i = 0; i < files; ++i) {
    const auto dir = root / ("pkg" + std::to_string(i % 7)) / ("sub" + std::to_string(i % 3));
    std::filesystem::create_directories(dir);
    std::string text = "\"\"\"Module " + std::to_string(i) + ".\"\"\"\n";
    if (i % 50 == 49) {
      text += "def broken(:\n    pass\n";
    } else {
      for (int k = count(rng); k > 0; --k) text += snippets[pick(rng)] + "\n";
    }
    write_file(dir / ("m" + std::to_string(i) + ".py"), text);
  }
  write_file(root / "README.md", "not python\n");
}

}  // namespace smellscan::testing

#endif  // SMELLSCAN_TESTS_SUPPORT_CORPUS_HPP_
