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

#include "webskill/llm/backend.hpp"

namespace webskill::llm {

namespace {
constexpr std::string_view kRoleNames[] = {"policy", "judge", "cleaner", "inducer"};
}

std::string_view to_string(PromptRole r) { return kRoleNames[static_cast<int>(r)]; }

std::optional<PromptRole> parse_prompt_role(std::string_view s) {
  for (int i = 0; i < 4; ++i) {
    if (kRoleNames[i] == s) return static_cast<PromptRole>(i);
  }
  return std::nullopt;
}

std::unique_ptr<Backend> make_backend(std::string_view descriptor, const HttpConfig& http_defaults) {
  auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) throw Error("backend descriptor must be scripted:FILE or http:URL");
  std::string_view kind = descriptor.substr(0, colon);
  std::string rest(descriptor.substr(colon + 1));
  if (kind == "scripted") return ScriptedBackend::load(rest);
  if (kind == "http") {
    HttpConfig cfg = http_defaults;
    cfg.url = rest;
    return std::make_unique<HttpBackend>(cfg);
  }
  throw Error("unknown backend kind '" + std::string(kind) + "'");
}

}  // namespace webskill::llm
