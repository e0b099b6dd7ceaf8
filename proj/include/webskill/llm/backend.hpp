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

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "webskill/error.hpp"

namespace webskill::llm {

enum class PromptRole { policy, judge, cleaner, inducer };
std::string_view to_string(PromptRole r);
std::optional<PromptRole> parse_prompt_role(std::string_view s);

struct DecodingParams {
  double temperature = 0.0;
  int max_output_tokens = 1024;
};

struct ChatRequest {
  PromptRole role = PromptRole::policy;
  std::string prompt;
  DecodingParams decoding;
};

struct ChatResponse {
  std::string text;
  double latency_ms = 0;
  std::string backend_id;
};

class BackendError : public Error {
 public:
  using Error::Error;
};
class ReplayExhausted : public BackendError {
 public:
  using BackendError::BackendError;
};
class TransportError : public BackendError {
 public:
  using BackendError::BackendError;
};
class NonOkStatus : public BackendError {
 public:
  NonOkStatus(int status, const std::string& body)
      : BackendError("HTTP status " + std::to_string(status) + ": " + body), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

class Backend {
 public:
  virtual ~Backend() = default;
  /// Throws BackendError subclasses; never returns a partial response.
  virtual ChatResponse complete(const ChatRequest& request) = 0;
  virtual std::string id() const = 0;
};

struct ReplayEntry {
  PromptRole role;
  int index = 0;
  std::string response;
};

/// Serves recorded responses keyed by (role, occurrence within role).
/// Requests are kept so tests can inspect rendered prompts.
class ScriptedBackend : public Backend {
 public:
  explicit ScriptedBackend(std::vector<ReplayEntry> entries, std::string id = "scripted");
  static std::unique_ptr<ScriptedBackend> load(const std::filesystem::path& path);
  static std::unique_ptr<ScriptedBackend> parse(std::string_view document, std::string id = "scripted");

  ChatResponse complete(const ChatRequest& request) override;
  std::string id() const override { return id_; }

  std::vector<ChatRequest> requests() const;
  /// Entries of `role` not consumed yet.
  std::size_t remaining(PromptRole role) const;

 private:
  std::string id_;
  std::map<std::pair<PromptRole, int>, std::string> entries_;
  std::map<PromptRole, int> consumed_;
  std::vector<ChatRequest> requests_;
  mutable std::mutex mu_;
};

struct HttpConfig {
  std::string url;  // full endpoint, e.g. http://127.0.0.1:8000/v1/chat/completions
  std::string model = "gpt-4o";
  std::string api_key_env = "OPENAI_API_KEY";
  int max_attempts = 3;
  int initial_backoff_ms = 200;
  int timeout_s = 120;
};

/// Chat-completion client. Refuses to run when NO_NETWORK=1.
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(HttpConfig config);
  ChatResponse complete(const ChatRequest& request) override;
  std::string id() const override { return "http:" + config_.url; }

 private:
  HttpConfig config_;
};

/// "scripted:PATH" or "http:URL".
std::unique_ptr<Backend> make_backend(std::string_view descriptor, const HttpConfig& http_defaults = {});

}  // namespace webskill::llm
