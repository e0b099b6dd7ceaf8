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

#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "webskill/llm/backend.hpp"

namespace webskill::testing {

/// Scripted backend serving `responses` in order for one role each.
inline std::unique_ptr<llm::ScriptedBackend> scripted(
    std::initializer_list<std::pair<llm::PromptRole, std::string>> responses) {
  std::vector<llm::ReplayEntry> entries;
  std::map<llm::PromptRole, int> next;
  for (const auto& [role, text] : responses) entries.push_back({role, next[role]++, text});
  return std::make_unique<llm::ScriptedBackend>(std::move(entries));
}

inline std::unique_ptr<llm::ScriptedBackend> scripted_policy(const std::vector<std::string>& responses) {
  std::vector<llm::ReplayEntry> entries;
  int i = 0;
  for (const auto& r : responses) entries.push_back({llm::PromptRole::policy, i++, r});
  return std::make_unique<llm::ScriptedBackend>(std::move(entries));
}

}  // namespace webskill::testing
