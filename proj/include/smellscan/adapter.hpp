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

// Client side of the semantic scoring service.
//
//   POST /classify  {"file_text": "...", "stages": [{"name": ..., "description": ...}]}
//                -> {"scores": {"<stage name>": 0.93, ...}, "model_id": "..."}
//   GET  /health -> {"model_id": "..."}

#ifndef SMELLSCAN_ADAPTER_HPP_
#define SMELLSCAN_ADAPTER_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "smellscan/http.hpp"
#include "smellscan/stages.hpp"

namespace smellscan {

class SemanticAdapter {
 public:
  virtual ~SemanticAdapter() = default;
  // Scores for every described stage, or nothing when unavailable.
  virtual std::optional<StageScores> score(std::string_view text,
                                           const StageDescriptions& stages) = 0;
  virtual std::string last_error() const { return {}; }
};

// Keyword-only classification.
class NullAdapter : public SemanticAdapter {
 public:
  std::optional<StageScores> score(std::string_view, const StageDescriptions&) override {
    return std::nullopt;
  }
};

class HttpAdapter : public SemanticAdapter {
 public:
  struct Options {
    int retries = 1;
    // Consecutive failed files after which the service is no longer asked.
    int failure_limit = 2;
  };

  HttpAdapter(std::string endpoint, std::shared_ptr<HttpTransport> transport);
  HttpAdapter(std::string endpoint, std::shared_ptr<HttpTransport> transport, Options options);

  std::optional<StageScores> score(std::string_view text, const StageDescriptions& stages) override;
  std::string last_error() const override { return last_error_; }

  // model_id reported by the health endpoint.
  std::optional<std::string> health();
  bool offline() const { return consecutive_failures_ >= options_.failure_limit; }

 private:
  std::optional<StageScores> request(const nlohmann::json& body, const StageDescriptions& stages);

  std::string endpoint_;
  std::shared_ptr<HttpTransport> transport_;
  Options options_;
  int consecutive_failures_ = 0;
  std::string last_error_;
};

nlohmann::json score_request(std::string_view text, const StageDescriptions& stages);

// Validates a /classify response: every requested stage present, all scores
// in [0, 1]. Throws std::runtime_error otherwise.
StageScores parse_score_response(const nlohmann::json& response, const StageDescriptions& stages);

}  // namespace smellscan

#endif  // SMELLSCAN_ADAPTER_HPP_
