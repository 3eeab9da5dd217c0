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

#include "smellscan/report.hpp"

#include <fstream>
#include <sstream>

namespace smellscan {

using nlohmann::json;

namespace {

std::string valid_kinds() {
  std::string out;
  for (SmellKind k : kAllSmellKinds) {
    if (!out.empty()) out += ", ";
    out += smell_name(k);
  }
  return out;
}

const json& require(const json& object, const char* key, std::size_t index) {
  if (!object.is_object()) throw SchemaError(key, index, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) throw SchemaError(key, index, "missing key");
  return *it;
}

std::string require_string(const json& object, const char* key, std::size_t index) {
  const json& v = require(object, key, index);
  if (!v.is_string()) throw SchemaError(key, index, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> require_lines(const json& object, const char* key, std::size_t index) {
  const json& v = require(object, key, index);
  if (!v.is_array()) throw SchemaError(key, index, "expected a list of strings");
  std::vector<std::string> lines;
  for (const json& line : v) {
    if (!line.is_string()) throw SchemaError(key, index, "expected a list of strings");
    lines.push_back(line.get<std::string>());
  }
  return lines;
}

int position_part(const json& v, std::size_t index) {
  if (!v.is_number_integer()) throw SchemaError("lineno", index, "expected integer positions");
  return v.get<int>();
}

SourcePosition read_position(const json& v, std::size_t index) {
  if (!v.is_array() || v.size() != 2) {
    throw SchemaError("lineno", index, "expected a [line, col] pair");
  }
  return {position_part(v[0], index), position_part(v[1], index)};
}

std::size_t require_count(const json& object, const char* key) {
  const json& v = require(object, key, SchemaError::npos);
  if (!v.is_number_unsigned()) throw SchemaError(key, SchemaError::npos, "expected a count");
  return v.get<std::size_t>();
}

}  // namespace

SchemaError::SchemaError(std::string key, std::size_t index, const std::string& detail)
    : std::runtime_error(index == npos ? "report header, key \"" + key + "\": " + detail
                                       : "record " + std::to_string(index) + ", key \"" + key +
                                             "\": " + detail),
      key_(std::move(key)),
      index_(index) {}

json write_detection(const Detection& d) {
  json lineno = json::array();
  for (const SourceRange& r : d.ranges) {
    lineno.push_back({{r.start_line, r.start_col}, {r.end_line, r.end_col}});
  }
  return {
      {"file_path", d.file_path},
      {"cl", d.scope.class_name},
      {"me", d.scope.function_name},
      {"idiom", std::string(smell_name(d.kind))},
      {"compli_code", d.compli_code},
      {"simple_code", d.simple_code},
      {"lineno", lineno},
      {"keyno", nullptr},
  };
}

Detection read_detection(const json& record, std::size_t index) {
  Detection d;
  d.file_path = require_string(record, "file_path", index);
  d.scope.class_name = require_string(record, "cl", index);
  d.scope.function_name = require_string(record, "me", index);
  const std::string idiom = require_string(record, "idiom", index);
  const auto kind = smell_from_name(idiom);
  if (!kind) {
    throw SchemaError("idiom", index, "unknown idiom \"" + idiom + "\"; valid: " + valid_kinds());
  }
  d.kind = *kind;
  d.compli_code = require_lines(record, "compli_code", index);
  d.simple_code = require_lines(record, "simple_code", index);
  const json& lineno = require(record, "lineno", index);
  if (!lineno.is_array() || lineno.empty()) {
    throw SchemaError("lineno", index, "expected a non-empty list of ranges");
  }
  for (const json& range : lineno) {
    if (!range.is_array() || range.size() != 2) {
      throw SchemaError("lineno", index, "expected [[line, col], [line, col]]");
    }
    d.ranges.push_back(
        SourceRange::between(read_position(range[0], index), read_position(range[1], index)));
  }
  if (!require(record, "keyno", index).is_null()) {
    throw SchemaError("keyno", index, "expected null");
  }
  return d;
}

json write_report(const ScanReport& report) {
  json errors = json::array();
  for (const auto& e : report.parse_errors)
    errors.push_back({{"path", e.path}, {"message", e.message}});
  json detections = json::array();
  for (const auto& d : report.detections) detections.push_back(write_detection(d));
  return {
      {"tool_version", report.tool_version},
      {"scanned_files", report.scanned_files},
      {"parse_errors", errors},
      {"detections", detections},
      {"loc_by_file", report.loc_by_file},
      {"config", report.config},
  };
}

ScanReport parse_report(const json& document) {
  constexpr std::size_t kHeader = SchemaError::npos;
  ScanReport report;
  report.tool_version = require_string(document, "tool_version", kHeader);
  report.scanned_files = require_count(document, "scanned_files");
  const json& errors = require(document, "parse_errors", kHeader);
  if (!errors.is_array()) throw SchemaError("parse_errors", kHeader, "expected a list");
  for (const json& e : errors) {
    report.parse_errors.push_back(
        {require_string(e, "path", kHeader), require_string(e, "message", kHeader)});
  }
  const json& detections = require(document, "detections", kHeader);
  if (!detections.is_array()) throw SchemaError("detections", kHeader, "expected a list");
  for (std::size_t i = 0; i < detections.size(); ++i) {
    report.detections.push_back(read_detection(detections[i], i));
  }
  if (auto it = document.find("loc_by_file"); it != document.end()) {
    if (!it->is_object()) throw SchemaError("loc_by_file", kHeader, "expected an object");
    for (const auto& [path, loc] : it->items()) {
      if (!loc.is_number_unsigned()) throw SchemaError("loc_by_file", kHeader, "expected counts");
      report.loc_by_file[path] = loc.get<std::size_t>();
    }
  }
  if (auto it = document.find("config"); it != document.end()) report.config = *it;
  return report;
}

std::string dump_report(const ScanReport& report) { return write_report(report).dump(2) + "\n"; }

void save_report(const ScanReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_report(report);
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

ScanReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  json document;
  try {
    document = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path.string() + ": invalid JSON: " + e.what());
  }
  return parse_report(document);
}

}  // namespace smellscan
