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

// Repository discovery through a code-hosting search API and the sampling
// criteria:
//   C1 not a fork          C4 at least min_history_days between first and last commit
//   C2 min stars and forks C5 a commit on or after the activity cutoff
//   C3 min source files    C6 imports an ML library (or, inverted, does not)

#ifndef SMELLSCAN_MINER_HPP_
#define SMELLSCAN_MINER_HPP_

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "smellscan/http.hpp"

namespace smellscan {

using Date = std::chrono::year_month_day;

// Accepts YYYY-MM-DD, optionally followed by a time part as in ISO 8601.
std::optional<Date> parse_date(std::string_view text);
std::string format_date(const Date& date);

struct RepoMetadata {
  std::string full_name;
  bool is_fork = false;
  long long stars = 0;
  long long forks = 0;
  long long source_file_count = 0;
  Date first_commit{};
  Date last_commit{};
  bool imports_ml_libs = false;

  friend bool operator==(const RepoMetadata&, const RepoMetadata&) = default;
};

enum class MlImports { Require, Forbid, Ignore };

std::string_view ml_imports_name(MlImports mode);
std::optional<MlImports> ml_imports_from_name(std::string_view name);

struct FilterCriteria {
  bool require_not_fork = true;
  long long min_stars = 1;
  long long min_forks = 1;
  long long min_source_files = 5;
  long long min_history_days = 30;
  Date activity_cutoff{std::chrono::year{2023}, std::chrono::January, std::chrono::day{1}};
  MlImports ml_imports = MlImports::Require;
  std::vector<std::string> ml_libraries{"tensorflow", "keras", "torch", "sklearn"};
};

struct ManifestEntry {
  RepoMetadata repo;
  bool accepted = false;
  std::vector<std::string> rejection_reasons;
  // Outcome per criterion id, C1 .. C6; true means passed.
  std::map<std::string, bool> criteria;
};

struct CorpusManifest {
  std::vector<std::string> queries;
  std::string retrieved_at;
  std::vector<ManifestEntry> entries;

  std::size_t accepted_count() const;
};

// Top-level module of any import statement in any file is in `libs`.
// Unparseable files contribute nothing.
bool detect_ml_imports(const std::vector<std::string>& files, const std::vector<std::string>& libs);

// Entries in input order, duplicates by full_name dropped.
CorpusManifest apply_filters(const std::vector<RepoMetadata>& repos,
                             const FilterCriteria& criteria);

nlohmann::json to_json(const RepoMetadata& repo);
RepoMetadata repo_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FilterCriteria& criteria);
FilterCriteria criteria_from_json(const nlohmann::json& j, FilterCriteria base = {});
nlohmann::json to_json(const CorpusManifest& manifest);
CorpusManifest manifest_from_json(const nlohmann::json& j);

class ApiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ApiAuthError : public ApiError {
 public:
  using ApiError::ApiError;
};

class ApiRateLimited : public ApiError {
 public:
  ApiRateLimited(const std::string& what, std::chrono::seconds retry_after)
      : ApiError(what), retry_after_(retry_after) {}
  std::chrono::seconds retry_after() const { return retry_after_; }

 private:
  std::chrono::seconds retry_after_;
};

class GitHubClient {
 public:
  struct Options {
    std::string api_base = "https://api.github.com";
    std::string token;
    // Rate-limit waits before giving up.
    int max_rate_limit_waits = 3;
    std::chrono::seconds max_wait{900};
    // Source files fetched per repository when looking for ML imports.
    int import_probe_files = 100;
    std::string source_extension = ".py";
    std::function<void(std::chrono::seconds)> sleep;
    std::function<std::chrono::system_clock::time_point()> now;
  };

  GitHubClient(std::shared_ptr<HttpTransport> transport, Options options);

  // Search results in best-match order, at most top_n per keyword,
  // deduplicated across keywords. Only search fields are filled in.
  std::vector<RepoMetadata> search_repos(const std::vector<std::string>& keywords,
                                         std::size_t top_n,
                                         const std::optional<std::string>& suffix);

  // Fills commit dates, source file count and ML import use.
  RepoMetadata hydrate(RepoMetadata repo, const std::vector<std::string>& ml_libraries);

  // Query strings search_repos sends, in order.
  static std::vector<std::string> queries(const std::vector<std::string>& keywords,
                                          const std::optional<std::string>& suffix);

 private:
  nlohmann::json get_json(const std::string& path,
                          std::map<std::string, std::string>* headers = nullptr);
  HttpResponse get(const std::string& path, const std::string& accept);

  std::shared_ptr<HttpTransport> transport_;
  Options options_;
};

}  // namespace smellscan

#endif  // SMELLSCAN_MINER_HPP_
