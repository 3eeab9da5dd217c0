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

// Minimal HTTP client seam so API clients can run against fakes.

#ifndef SMELLSCAN_HTTP_HPP_
#define SMELLSCAN_HTTP_HPP_

#include <chrono>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace smellscan {

struct HttpRequest {
  std::string method = "GET";
  std::string url;  // absolute, scheme://host[:port]/path?query
  std::map<std::string, std::string> headers;
  std::string body;
  std::string content_type;
};

struct HttpResponse {
  int status = 0;
  std::string body;
  // Keys lowercased.
  std::map<std::string, std::string> headers;

  std::string header(const std::string& name) const;
};

// Connection-level failure: refused, timed out, TLS error.
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse send(const HttpRequest& request) = 0;
};

std::shared_ptr<HttpTransport> make_http_transport(
    std::chrono::milliseconds timeout = std::chrono::seconds(30));

std::string url_encode(const std::string& text);

}  // namespace smellscan

#endif  // SMELLSCAN_HTTP_HPP_
