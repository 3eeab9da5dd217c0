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

// Shared helpers for locating and loading test data.

#ifndef SMELLSCAN_TESTS_SUPPORT_FIXTURES_HPP_
#define SMELLSCAN_TESTS_SUPPORT_FIXTURES_HPP_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

namespace smellscan::testing {

inline std::filesystem::path data_path(const std::string& relative) {
  return std::filesystem::path(SMELLSCAN_TEST_DATA) / relative;
}

inline std::filesystem::path support_path(const std::string& relative) {
  return std::filesystem::path(SMELLSCAN_TEST_SUPPORT) / relative;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// Fresh empty directory under the system temp directory.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  static int counter = 0;
  const auto dir =
      std::filesystem::temp_directory_path() /
      ("smellscan-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace smellscan::testing

#endif  // SMELLSCAN_TESTS_SUPPORT_FIXTURES_HPP_
