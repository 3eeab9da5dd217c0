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

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "smellscan/http.hpp"

#include <algorithm>
#include <cctype>

namespace smellscan {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

class HttplibTransport : public HttpTransport {
 public:
  explicit HttplibTransport(std::chrono::milliseconds timeout) : timeout_(timeout) {}

  HttpResponse send(const HttpRequest& request) override {
    const std::size_t scheme_end = request.url.find("://");
    if (scheme_end == std::string::npos)
      throw TransportError("not an absolute URL: " + request.url);
    const std::size_t path_start = request.url.find('/', scheme_end + 3);
    const std::string origin = request.url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : request.url.substr(path_start);

    httplib::Client client(origin);
    if (!client.is_valid()) throw TransportError("unsupported URL: " + request.url);
    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - seconds);
    client.set_connection_timeout(seconds.count(), micros.count());
    client.set_read_timeout(seconds.count(), micros.count());
    client.set_write_timeout(seconds.count(), micros.count());
    client.set_follow_location(true);

    httplib::Headers headers(request.headers.begin(), request.headers.end());
    httplib::Result result;
    if (request.method == "GET") {
      result = client.Get(path, headers);
    } else if (request.method == "POST") {
      result =
          client.Post(path, headers, request.body,
                      request.content_type.empty() ? "application/json" : request.content_type);
    } else {
      throw TransportError("unsupported method " + request.method);
    }
    if (!result) {
      throw TransportError(request.method + " " + request.url + ": " +
                           httplib::to_string(result.error()));
    }
    HttpResponse response;
    response.status = result->status;
    response.body = result->body;
    for (const auto& [name, value] : result->headers) response.headers[lowercase(name)] = value;
    return response;
  }

 private:
  std::chrono::milliseconds timeout_;
};

}  // namespace

std::string HttpResponse::header(const std::string& name) const {
  auto it = headers.find(lowercase(name));
  return it == headers.end() ? std::string() : it->second;
}

std::shared_ptr<HttpTransport> make_http_transport(std::chrono::milliseconds timeout) {
  return std::make_shared<HttplibTransport>(timeout);
}

std::string url_encode(const std::string& text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 15];
    }
  }
  return out;
}

}  // namespace smellscan
