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

#include "smellscan/miner.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <thread>

#include "smellscan/syntax.hpp"

namespace smellscan {

using nlohmann::json;

namespace {

std::string top_level(std::string_view module) {
  return std::string(module.substr(0, module.find('.')));
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Page number of the rel="last" link in a Link header.
std::optional<int> last_page(const std::string& link) {
  const std::size_t rel = link.find("rel=\"last\"");
  if (rel == std::string::npos) return std::nullopt;
  const std::size_t open = link.rfind('<', rel);
  if (open == std::string::npos) return std::nullopt;
  const std::string url = link.substr(open, rel - open);
  std::size_t at = 0;
  while ((at = url.find("page=", at)) != std::string::npos) {
    if (at > 0 && (url[at - 1] == '?' || url[at - 1] == '&')) {
      int page = 0;
      const char* begin = url.data() + at + 5;
      auto [ptr, ec] = std::from_chars(begin, url.data() + url.size(), page);
      if (ec == std::errc() && ptr != begin) return page;
    }
    at += 5;
  }
  return std::nullopt;
}

Date commit_date(const json& commit) {
  const json& c = commit.at("commit");
  const json& who =
      c.contains("committer") && !c["committer"].is_null() ? c["committer"] : c.at("author");
  const auto date = parse_date(who.at("date").get<std::string>());
  if (!date) throw ApiError("unparseable commit date");
  return *date;
}

}  // namespace

std::optional<Date> parse_date(std::string_view text) {
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  auto parse = [&](std::size_t pos, std::size_t len, auto& out) {
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, out);
    return ec == std::errc() && ptr == text.data() + pos + len;
  };
  if (!parse(0, 4, y) || !parse(5, 2, m) || !parse(8, 2, d)) return std::nullopt;
  if (text.size() > 10 && text[10] != 'T' && text[10] != ' ') return std::nullopt;
  const Date date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string format_date(const Date& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

std::string_view ml_imports_name(MlImports mode) {
  switch (mode) {
    case MlImports::Require:
      return "require";
    case MlImports::Forbid:
      return "forbid";
    case MlImports::Ignore:
      break;
  }
  return "ignore";
}

std::optional<MlImports> ml_imports_from_name(std::string_view name) {
  for (MlImports m : {MlImports::Require, MlImports::Forbid, MlImports::Ignore}) {
    if (ml_imports_name(m) == name) return m;
  }
  return std::nullopt;
}

std::size_t CorpusManifest::accepted_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.accepted; }));
}

bool detect_ml_imports(const std::vector<std::string>& files,
                       const std::vector<std::string>& libs) {
  const std::set<std::string> wanted(libs.begin(), libs.end());
  for (const std::string& text : files) {
    try {
      const SourceUnit unit = parse_unit("<repo>", text);
      bool found = false;
      walk(unit.tree(), [&](const Node& n) {
        if (found) return false;
        if (n.is(NodeKind::Import)) {
          for (const auto& alias : n.children)
            found = found || wanted.contains(top_level(alias->text));
          return false;
        }
        if (n.is(NodeKind::ImportFrom)) {
          found = n.level == 0 && wanted.contains(top_level(n.text));
          return false;
        }
        return true;
      });
      if (found) return true;
    } catch (const ParseError&) {
    }
  }
  return false;
}

CorpusManifest apply_filters(const std::vector<RepoMetadata>& repos,
                             const FilterCriteria& criteria) {
  CorpusManifest manifest;
  std::set<std::string> seen;
  for (const RepoMetadata& repo : repos) {
    if (!seen.insert(repo.full_name).second) continue;
    ManifestEntry e;
    e.repo = repo;
    const long long history =
        (std::chrono::sys_days(repo.last_commit) - std::chrono::sys_days(repo.first_commit))
            .count();
    e.criteria["C1"] = !criteria.require_not_fork || !repo.is_fork;
    e.criteria["C2"] = repo.stars >= criteria.min_stars && repo.forks >= criteria.min_forks;
    e.criteria["C3"] = repo.source_file_count >= criteria.min_source_files;
    e.criteria["C4"] = history >= criteria.min_history_days;
    e.criteria["C5"] = repo.last_commit >= criteria.activity_cutoff;
    switch (criteria.ml_imports) {
      case MlImports::Require:
        e.criteria["C6"] = repo.imports_ml_libs;
        break;
      case MlImports::Forbid:
        e.criteria["C6"] = !repo.imports_ml_libs;
        break;
      case MlImports::Ignore:
        e.criteria["C6"] = true;
        break;
    }
    for (const auto& [id, passed] : e.criteria) {
      if (passed) continue;
      e.rejection_reasons.push_back(
          id == "C6" && criteria.ml_imports == MlImports::Forbid ? "C6-inverted" : id);
    }
    e.accepted = e.rejection_reasons.empty();
    manifest.entries.push_back(std::move(e));
  }
  return manifest;
}

json to_json(const RepoMetadata& r) {
  return {{"full_name", r.full_name},
          {"is_fork", r.is_fork},
          {"stars", r.stars},
          {"forks", r.forks},
          {"source_file_count", r.source_file_count},
          {"first_commit", format_date(r.first_commit)},
          {"last_commit", format_date(r.last_commit)},
          {"imports_ml_libs", r.imports_ml_libs}};
}

RepoMetadata repo_from_json(const json& j) {
  RepoMetadata r;
  r.full_name = j.at("full_name").get<std::string>();
  r.is_fork = j.at("is_fork").get<bool>();
  r.stars = j.at("stars").get<long long>();
  r.forks = j.at("forks").get<long long>();
  r.source_file_count = j.at("source_file_count").get<long long>();
  auto date = [&](const char* key) {
    const auto d = parse_date(j.at(key).get<std::string>());
    if (!d) throw std::invalid_argument(std::string("bad date in ") + key);
    return *d;
  };
  r.first_commit = date("first_commit");
  r.last_commit = date("last_commit");
  r.imports_ml_libs = j.at("imports_ml_libs").get<bool>();
  return r;
}

json to_json(const FilterCriteria& c) {
  return {{"require_not_fork", c.require_not_fork},
          {"min_stars", c.min_stars},
          {"min_forks", c.min_forks},
          {"min_source_files", c.min_source_files},
          {"min_history_days", c.min_history_days},
          {"activity_cutoff", format_date(c.activity_cutoff)},
          {"ml_imports", std::string(ml_imports_name(c.ml_imports))},
          {"ml_libraries", c.ml_libraries}};
}

FilterCriteria criteria_from_json(const json& j, FilterCriteria c) {
  if (!j.is_object()) throw std::invalid_argument("filter criteria must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "require_not_fork") {
      c.require_not_fork = value.get<bool>();
    } else if (key == "min_stars") {
      c.min_stars = value.get<long long>();
    } else if (key == "min_forks") {
      c.min_forks = value.get<long long>();
    } else if (key == "min_source_files") {
      c.min_source_files = value.get<long long>();
    } else if (key == "min_history_days") {
      c.min_history_days = value.get<long long>();
    } else if (key == "activity_cutoff") {
      const auto d = parse_date(value.get<std::string>());
      if (!d) throw std::invalid_argument("activity_cutoff must be YYYY-MM-DD");
      c.activity_cutoff = *d;
    } else if (key == "ml_imports") {
      const auto m = ml_imports_from_name(value.get<std::string>());
      if (!m) throw std::invalid_argument("ml_imports must be require, forbid or ignore");
      c.ml_imports = *m;
    } else if (key == "ml_libraries") {
      c.ml_libraries = value.get<std::vector<std::string>>();
    } else {
      throw std::invalid_argument("unknown filter criterion \"" + key + "\"");
    }
  }
  if (c.min_stars < 0 || c.min_forks < 0 || c.min_source_files < 0 || c.min_history_days < 0) {
    throw std::invalid_argument("filter thresholds must be non-negative");
  }
  return c;
}

json to_json(const CorpusManifest& m) {
  json entries = json::array();
  for (const auto& e : m.entries) {
    entries.push_back({{"repo", to_json(e.repo)},
                       {"accepted", e.accepted},
                       {"rejection_reasons", e.rejection_reasons},
                       {"criteria", e.criteria}});
  }
  return {{"queries", m.queries}, {"retrieved_at", m.retrieved_at}, {"entries", entries}};
}

CorpusManifest manifest_from_json(const json& j) {
  CorpusManifest m;
  m.queries = j.at("queries").get<std::vector<std::string>>();
  m.retrieved_at = j.at("retrieved_at").get<std::string>();
  for (const json& e : j.at("entries")) {
    ManifestEntry entry;
    entry.repo = repo_from_json(e.at("repo"));
    entry.accepted = e.at("accepted").get<bool>();
    entry.rejection_reasons = e.at("rejection_reasons").get<std::vector<std::string>>();
    entry.criteria = e.at("criteria").get<std::map<std::string, bool>>();
    m.entries.push_back(std::move(entry));
  }
  return m;
}

GitHubClient::GitHubClient(std::shared_ptr<HttpTransport> transport, Options options)
    : transport_(std::move(transport)), options_(std::move(options)) {
  while (!options_.api_base.empty() && options_.api_base.back() == '/')
    options_.api_base.pop_back();
  if (!options_.sleep)
    options_.sleep = [](std::chrono::seconds s) { std::this_thread::sleep_for(s); };
  if (!options_.now) options_.now = [] { return std::chrono::system_clock::now(); };
}

std::vector<std::string> GitHubClient::queries(const std::vector<std::string>& keywords,
                                               const std::optional<std::string>& suffix) {
  std::vector<std::string> out;
  for (const auto& k : keywords) out.push_back(suffix && !suffix->empty() ? k + " " + *suffix : k);
  return out;
}

HttpResponse GitHubClient::get(const std::string& path, const std::string& accept) {
  HttpRequest req;
  req.url = options_.api_base + path;
  req.headers["Accept"] = accept;
  req.headers["X-GitHub-Api-Version"] = "2022-11-28";
  req.headers["User-Agent"] = "smellscan";
  if (!options_.token.empty()) req.headers["Authorization"] = "Bearer " + options_.token;
  for (int waits = 0;; ++waits) {
    HttpResponse res;
    try {
      res = transport_->send(req);
    } catch (const TransportError& e) {
      throw ApiError(e.what());
    }
    if (res.status == 401)
      throw ApiAuthError("API rejected the token (HTTP 401); check GITHUB_TOKEN");
    const bool limited =
        res.status == 429 || (res.status == 403 && (res.header("x-ratelimit-remaining") == "0" ||
                                                    !res.header("retry-after").empty()));
    if (!limited) {
      if (res.status == 403) throw ApiAuthError("API refused access (HTTP 403) to " + path);
      if (res.status < 200 || res.status >= 300) {
        throw ApiError("HTTP " + std::to_string(res.status) + " for " + path);
      }
      return res;
    }
    std::chrono::seconds wait{60};
    if (const std::string retry = res.header("retry-after"); !retry.empty()) {
      wait = std::chrono::seconds(std::atoll(retry.c_str()));
    } else if (const std::string reset = res.header("x-ratelimit-reset"); !reset.empty()) {
      const auto now =
          std::chrono::duration_cast<std::chrono::seconds>(options_.now().time_since_epoch());
      wait = std::chrono::seconds(std::atoll(reset.c_str())) - now;
    }
    wait = std::clamp(wait, std::chrono::seconds(1), options_.max_wait);
    if (waits >= options_.max_rate_limit_waits) {
      throw ApiRateLimited("rate limit still exhausted after " + std::to_string(waits) +
                               " waits; retry in " + std::to_string(wait.count()) + " s",
                           wait);
    }
    options_.sleep(wait);
  }
}

json GitHubClient::get_json(const std::string& path, std::map<std::string, std::string>* headers) {
  const HttpResponse res = get(path, "application/vnd.github+json");
  if (headers != nullptr) *headers = res.headers;
  try {
    return json::parse(res.body);
  } catch (const json::parse_error& e) {
    throw ApiError("malformed JSON from " + path + ": " + e.what());
  }
}

std::vector<RepoMetadata> GitHubClient::search_repos(const std::vector<std::string>& keywords,
                                                     std::size_t top_n,
                                                     const std::optional<std::string>& suffix) {
  if (top_n == 0) throw std::invalid_argument("top_n must be at least 1");
  std::vector<RepoMetadata> out;
  std::set<std::string> seen;
  const std::size_t per_page = std::min<std::size_t>(100, top_n);
  for (const std::string& q : queries(keywords, suffix)) {
    std::size_t taken = 0;
    for (int page = 1; taken < top_n; ++page) {
      const json body = get_json("/search/repositories?q=" + url_encode(q) + "&per_page=" +
                                 std::to_string(per_page) + "&page=" + std::to_string(page));
      const json& items = body.at("items");
      for (const json& item : items) {
        if (taken == top_n) break;
        ++taken;
        RepoMetadata r;
        r.full_name = item.at("full_name").get<std::string>();
        if (!seen.insert(r.full_name).second) continue;
        r.is_fork = item.value("fork", false);
        r.stars = item.value("stargazers_count", 0LL);
        r.forks = item.value("forks_count", 0LL);
        out.push_back(std::move(r));
      }
      if (items.size() < per_page) break;
    }
  }
  return out;
}

RepoMetadata GitHubClient::hydrate(RepoMetadata repo,
                                   const std::vector<std::string>& ml_libraries) {
  const std::string base = "/repos/" + repo.full_name;
  const json info = get_json(base);
  repo.is_fork = info.value("fork", repo.is_fork);
  repo.stars = info.value("stargazers_count", repo.stars);
  repo.forks = info.value("forks_count", repo.forks);
  const std::string branch = info.value("default_branch", std::string("main"));

  std::map<std::string, std::string> headers;
  const json newest = get_json(base + "/commits?per_page=1", &headers);
  if (!newest.is_array() || newest.empty()) throw ApiError(repo.full_name + " has no commits");
  repo.last_commit = commit_date(newest[0]);
  repo.first_commit = repo.last_commit;
  if (const auto last = last_page(headers["link"])) {
    const json oldest = get_json(base + "/commits?per_page=1&page=" + std::to_string(*last));
    if (oldest.is_array() && !oldest.empty()) repo.first_commit = commit_date(oldest[0]);
  }

  const json tree = get_json(base + "/git/trees/" + url_encode(branch) + "?recursive=1");
  std::vector<std::string> sources;
  for (const json& item : tree.at("tree")) {
    const std::string path = item.value("path", std::string());
    if (item.value("type", std::string()) == "blob" && ends_with(path, options_.source_extension)) {
      sources.push_back(path);
    }
  }
  repo.source_file_count = static_cast<long long>(sources.size());

  repo.imports_ml_libs = false;
  const std::size_t probe = std::min<std::size_t>(sources.size(), options_.import_probe_files);
  for (std::size_t i = 0; i < probe && !repo.imports_ml_libs; ++i) {
    std::string encoded;
    for (char c : sources[i])
      encoded += c == '/' ? std::string("/") : url_encode(std::string(1, c));
    const HttpResponse file = get(base + "/contents/" + encoded + "?ref=" + url_encode(branch),
                                  "application/vnd.github.raw");
    repo.imports_ml_libs = detect_ml_imports({file.body}, ml_libraries);
  }
  return repo;
}

}  // namespace smellscan
