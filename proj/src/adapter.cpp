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

#include "smellscan/adapter.hpp"

#include <cmath>

namespace smellscan {

using nlohmann::json;

namespace {

std::string trim_slash(std::string s) {
  while (!s.empty() && s.back() == '/') s.pop_back();
  return s;
}

}  // namespace

json score_request(std::string_view text, const StageDescriptions& stages) {
  json list = json::array();
  for (const auto& [stage, description] : stages.entries) {
    list.push_back({{"name", std::string(stage_name(stage))}, {"description", description}});
  }
  return {{"file_text", std::string(text)}, {"stages", list}};
}

StageScores parse_score_response(const json& response, const StageDescriptions& stages) {
  if (!response.is_object() || !response.contains("scores") || !response["scores"].is_object()) {
    throw std::runtime_error("response has no \"scores\" object");
  }
  const json& scores = response["scores"];
  StageScores out;
  for (const auto& [stage, description] : stages.entries) {
    const std::string name(stage_name(stage));
    auto it = scores.find(name);
    if (it == scores.end() || !it->is_number()) {
      throw std::runtime_error("response lacks a score for " + name);
    }
    const double v = it->get<double>();
    if (!std::isfinite(v) || v < 0 || v > 1) {
      throw std::runtime_error("score for " + name + " outside [0, 1]");
    }
    out[stage] = v;
  }
  return out;
}

HttpAdapter::HttpAdapter(std::string endpoint, std::shared_ptr<HttpTransport> transport)
    : HttpAdapter(std::move(endpoint), std::move(transport), Options{}) {}

HttpAdapter::HttpAdapter(std::string endpoint, std::shared_ptr<HttpTransport> transport,
                         Options options)
    : endpoint_(trim_slash(std::move(endpoint))),
      transport_(std::move(transport)),
      options_(options) {}

std::optional<StageScores> HttpAdapter::score(std::string_view text,
                                              const StageDescriptions& stages) {
  if (offline() || stages.entries.empty()) return std::nullopt;
  auto scores = request(score_request(text, stages), stages);
  if (scores) {
    consecutive_failures_ = 0;
  } else {
    ++consecutive_failures_;
  }
  return scores;
}

std::optional<StageScores> HttpAdapter::request(const json& body, const StageDescriptions& stages) {
  HttpRequest req;
  req.method = "POST";
  req.url = endpoint_ + "/classify";
  req.body = body.dump();
  req.content_type = "application/json";
  for (int attempt = 0; attempt <= options_.retries; ++attempt) {
    try {
      const HttpResponse res = transport_->send(req);
      if (res.status != 200) {
        last_error_ = "adapter returned HTTP " + std::to_string(res.status);
        continue;
      }
      return parse_score_response(json::parse(res.body), stages);
    } catch (const TransportError& e) {
      last_error_ = e.what();
    } catch (const json::exception& e) {
      last_error_ = std::string("malformed adapter response: ") + e.what();
    } catch (const std::runtime_error& e) {
      last_error_ = std::string("invalid adapter response: ") + e.what();
    }
  }
  return std::nullopt;
}

std::optional<std::string> HttpAdapter::health() {
  HttpRequest req;
  req.url = endpoint_ + "/health";
  try {
    const HttpResponse res = transport_->send(req);
    if (res.status != 200) {
      last_error_ = "health check returned HTTP " + std::to_string(res.status);
      return std::nullopt;
    }
    const json body = json::parse(res.body);
    if (!body.is_object() || !body.contains("model_id") || !body["model_id"].is_string()) {
      last_error_ = "health response has no model_id";
      return std::nullopt;
    }
    return body["model_id"].get<std::string>();
  } catch (const TransportError& e) {
    last_error_ = e.what();
  } catch (const json::exception& e) {
    last_error_ = std::string("malformed health response: ") + e.what();
  }
  return std::nullopt;
}

}  // namespace smellscan
