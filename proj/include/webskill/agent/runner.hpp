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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "webskill/agent/episode.hpp"
#include "webskill/agent/library.hpp"
#include "webskill/agent/memory.hpp"
#include "webskill/llm/backend.hpp"
#include "webskill/websim/site.hpp"
#include "webskill/websim/task.hpp"

namespace webskill::agent {

enum class Mode { vanilla, memory_text, memory_program, asi };
std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view s);

struct AgentConfig {
  int max_steps = 10;
  Mode mode = Mode::asi;
  bool verify_induction = true;
  llm::DecodingParams decoding;
  /// Consecutive unparseable policy outputs before giving up.
  int parse_failure_budget = 5;
};

/// Raised when a forced prefix names an action outside primitives and library.
class UnresolvedPrefix : public Error {
 public:
  using Error::Error;
};

/// Skills listed as callable are the library's only in asi mode; memory
/// entries are shown in every mode. The step budget is the task's own
/// max_steps when set, else config.max_steps.
Episode run_episode(const websim::Task& task, std::shared_ptr<const websim::SiteSpec> site,
                    const AgentConfig& config, const SkillLibrary& library, const Memory& memory,
                    llm::Backend& backend,
                    const std::optional<std::vector<dsl::Action>>& forced_prefix = std::nullopt);

int step_budget(const websim::Task& task, const AgentConfig& config);

}  // namespace webskill::agent
