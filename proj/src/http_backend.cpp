// http_backend.cpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Chat-completion client. Kept in its own translation unit so the
// cpp-httplib header is compiled once.

#include <json.hpp>

#include "mcqlint/httplib_config.hpp"

#include "mcqlint/llmgate.hpp"

namespace mcqlint::llmgate {

using json = nlohmann::json;

namespace {

struct TransientHttpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Splits "scheme://host[:port]/path" into client base and request path.
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
  auto scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw GateError("endpoint must include scheme: " + endpoint);
  }
  auto path_start = endpoint.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    return {endpoint, "/"};
  }
  return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

}  // namespace

std::string HttpBackend::complete(const CallContext& call) {
  auto [base, path] = split_endpoint(config_.endpoint);

  httplib::Client client(base);
  client.set_connection_timeout(config_.connect_timeout_s, 0);
  client.set_read_timeout(config_.read_timeout_s, 0);

  json body;
  body["model"] = config_.model;
  body["temperature"] = config_.temperature;
  body["messages"] = json::array({
      json{{"role", "user"}, {"content", call.rendered}},
  });

  httplib::Headers headers;
  if (!config_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + config_.api_key);
  }

  auto res = client.Post(path, headers, body.dump(), "application/json");
  if (!res) {
    throw TransientHttpError("no response from " + config_.endpoint);
  }
  if (res->status != 200) {
    throw TransientHttpError("HTTP " + std::to_string(res->status) + " from " +
                             config_.endpoint);
  }
  try {
    json reply = json::parse(res->body);
    return reply.at("choices").at(0).at("message").at("content")
        .get<std::string>();
  } catch (const json::exception& e) {
    throw TransientHttpError(std::string("bad completion payload: ") + e.what());
  }
}

}  // namespace mcqlint::llmgate
