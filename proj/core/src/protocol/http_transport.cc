// Copyright 2026 The advtext Authors
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

#include <cstdlib>

#include "advtext/core/error.h"
#include "advtext/protocol/transport.h"
#include "httplib.h"

namespace advtext::protocol {
namespace {

class HttpTransport : public Transport {
 public:
  HttpTransport(std::string base_url, HttpOptions options)
      : base_url_(std::move(base_url)), options_(options) {
    while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
  }

  std::string Exchange(MessageKind kind, const std::string& /*id*/,
                       const std::string& line) override {
    // httplib::Client is not safe for concurrent use; one per exchange.
    httplib::Client client(base_url_);
    client.set_connection_timeout(options_.connect_timeout);
    client.set_read_timeout(options_.read_timeout);
    const std::string path = "/v1/" + std::string(MessageKindName(kind));
    auto result = client.Post(path, line, "application/x-ndjson");
    if (!result) {
      throw Error(ErrorCode::kTransport,
                  "POST " + base_url_ + path + ": " +
                      httplib::to_string(result.error()));
    }
    if (result->body.empty()) {
      throw Error(ErrorCode::kProtocol,
                  "empty reply body (HTTP " + std::to_string(result->status) +
                      ")");
    }
    return result->body;
  }

 private:
  std::string base_url_;
  HttpOptions options_;
};

}  // namespace

std::unique_ptr<Transport> MakeHttpTransport(std::string base_url,
                                             HttpOptions options) {
  return std::make_unique<HttpTransport>(std::move(base_url), options);
}

std::unique_ptr<Transport> MakeTransport(const std::string& endpoint) {
  if (endpoint.rfind("http://", 0) == 0) return MakeHttpTransport(endpoint);
  if (endpoint.rfind("stdio:", 0) == 0) {
    return StdioTransport::Spawn(endpoint.substr(6));
  }
  throw Error(ErrorCode::kUsage,
              "endpoint must be http://host:port or stdio:<command>, got '" +
                  endpoint + "'");
}

}  // namespace advtext::protocol
