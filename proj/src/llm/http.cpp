// Copyright 2026 The Webskill Authors.
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

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "webskill/llm/backend.hpp"

namespace webskill::llm {

using nlohmann::json;

namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint split_url(const std::string& url) {
  auto scheme = url.find("://");
  if (scheme == std::string::npos) throw Error("http backend url needs a scheme: " + url);
  auto slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

bool network_disabled() {
  const char* v = std::getenv("NO_NETWORK");
  return v && std::string(v) == "1";
}

}  // namespace

HttpBackend::HttpBackend(HttpConfig config) : config_(std::move(config)) {
  if (config_.max_attempts < 1) config_.max_attempts = 1;
}

ChatResponse HttpBackend::complete(const ChatRequest& request) {
  if (network_disabled()) throw TransportError("NO_NETWORK=1 forbids the http backend");
  if (request.prompt.empty()) throw Error("rendered prompt is empty");
  Endpoint ep = split_url(config_.url);

  json body = {{"model", config_.model},
               {"messages", json::array({{{"role", "user"}, {"content", request.prompt}}})},
               {"temperature", request.decoding.temperature},
               {"max_tokens", request.decoding.max_output_tokens}};
  httplib::Headers headers;
  if (const char* key = std::getenv(config_.api_key_env.c_str()); key && *key) {
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }

  std::string last_error;
  for (int attempt = 0; attempt < config_.max_attempts; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(config_.initial_backoff_ms << (attempt - 1)));
    }
    httplib::Client client(ep.origin);
    client.set_connection_timeout(config_.timeout_s, 0);
    client.set_read_timeout(config_.timeout_s, 0);
    auto start = std::chrono::steady_clock::now();
    auto res = client.Post(ep.path, headers, body.dump(), "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 429 || res->status >= 500) {
      last_error = "HTTP status " + std::to_string(res->status);
      if (attempt + 1 == config_.max_attempts) throw NonOkStatus(res->status, res->body);
      continue;
    }
    if (res->status != 200) throw NonOkStatus(res->status, res->body);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    try {
      json reply = json::parse(res->body);
      return ChatResponse{reply.at("choices").at(0).at("message").at("content").get<std::string>(), ms, id()};
    } catch (const json::exception& e) {
      throw BackendError(std::string("malformed chat-completion reply: ") + e.what());
    }
  }
  throw TransportError("http backend failed after " + std::to_string(config_.max_attempts) +
                       " attempts: " + last_error);
}

}  // namespace webskill::llm
