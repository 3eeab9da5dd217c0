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

// Detection records and scan reports in JSON.
//
// A record has the keys file_path, cl, me, idiom, compli_code, simple_code,
// lineno and keyno. lineno is a list of ranges, each a pair of [line, col]
// pairs with 1-based lines and 0-based byte columns; keyno is always null.

#ifndef SMELLSCAN_REPORT_HPP_
#define SMELLSCAN_REPORT_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "smellscan/smells.hpp"

namespace smellscan {

inline constexpr const char* kToolVersion = "0.3.0";

struct ParseFailure {
  std::string path;
  std::string message;

  friend bool operator==(const ParseFailure&, const ParseFailure&) = default;
};

struct ScanReport {
  std::string tool_version = kToolVersion;
  std::size_t scanned_files = 0;
  std::vector<ParseFailure> parse_errors;
  std::vector<Detection> detections;
  // Counted lines per scanned file, keyed like Detection::file_path.
  std::map<std::string, std::size_t> loc_by_file;
  // Resolved configuration the scan ran with.
  nlohmann::json config = nlohmann::json::object();

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

// Malformed report input. index is the detection record position, or npos
// for the report header.
class SchemaError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  SchemaError(std::string key, std::size_t index, const std::string& detail);

  const std::string& key() const { return key_; }
  std::size_t index() const { return index_; }

 private:
  std::string key_;
  std::size_t index_;
};

nlohmann::json write_detection(const Detection& detection);
Detection read_detection(const nlohmann::json& record, std::size_t index = 0);

nlohmann::json write_report(const ScanReport& report);
ScanReport parse_report(const nlohmann::json& document);

// Serialized form: sorted keys, two-space indent, trailing newline.
std::string dump_report(const ScanReport& report);
void save_report(const ScanReport& report, const std::filesystem::path& path);
ScanReport read_report(const std::filesystem::path& path);

}  // namespace smellscan

#endif  // SMELLSCAN_REPORT_HPP_
