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

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "webskill/llm/backend.hpp"

namespace webskill::llm {

using nlohmann::json;

ScriptedBackend::ScriptedBackend(std::vector<ReplayEntry> entries, std::string id) : id_(std::move(id)) {
  for (auto& e : entries) {
    auto key = std::make_pair(e.role, e.index);
    if (entries_.count(key)) {
      throw Error("duplicate replay entry (" + std::string(to_string(e.role)) + ", " + std::to_string(e.index) + ")");
    }
    entries_[key] = std::move(e.response);
  }
}

std::unique_ptr<ScriptedBackend> ScriptedBackend::parse(std::string_view document, std::string id) {
  std::vector<ReplayEntry> entries;
  std::istringstream in{std::string(document)};
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error("replay line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!header) {
      if (j.value("schema", "") != "webskill.replay") throw Error("replay file lacks a webskill.replay header");
      if (j.value("version", 0) != 1) throw Error("unsupported replay version");
      header = true;
      continue;
    }
    auto role = parse_prompt_role(j.value("role", ""));
    if (!role || !j.contains("index") || !j["index"].is_number_integer() || !j.contains("response") ||
        !j["response"].is_string()) {
      throw Error("replay line " + std::to_string(lineno) + ": expected {role, index, response}");
    }
    entries.push_back({*role, j["index"].get<int>(), j["response"].get<std::string>()});
  }
  if (!header) throw Error("empty replay file");
  return std::make_unique<ScriptedBackend>(std::move(entries), std::move(id));
}

std::unique_ptr<ScriptedBackend> ScriptedBackend::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open replay file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), "scripted:" + path.filename().string());
}

ChatResponse ScriptedBackend::complete(const ChatRequest& request) {
  std::lock_guard lock(mu_);
  requests_.push_back(request);
  int index = consumed_[request.role];
  auto it = entries_.find({request.role, index});
  if (it == entries_.end()) {
    throw ReplayExhausted("no replay entry for (" + std::string(to_string(request.role)) + ", " +
                          std::to_string(index) + ")");
  }
  ++consumed_[request.role];
  return ChatResponse{it->second, 0, id_};
}

std::vector<ChatRequest> ScriptedBackend::requests() const {
  std::lock_guard lock(mu_);
  return requests_;
}

std::size_t ScriptedBackend::remaining(PromptRole role) const {
  std::lock_guard lock(mu_);
  std::size_t total = 0;
  for (const auto& [key, _] : entries_) total += key.first == role;
  auto it = consumed_.find(role);
  return total - static_cast<std::size_t>(it == consumed_.end() ? 0 : it->second);
}

}  // namespace webskill::llm
