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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "webskill/dsl/ast.hpp"
#include "webskill/error.hpp"

namespace webskill::llm {

class MissingField : public Error {
 public:
  explicit MissingField(const std::string& field) : Error("MissingField: " + field) {}
};

/// Instruction blocks for the evaluator, cleaner and inducer roles.
extern const std::string_view kJudgeInstructions;
extern const std::string_view kCleanerInstructions;
extern const std::string_view kInducerInstructions;

/// Number of trailing observations the policy sees in full.
inline constexpr std::size_t kFullObservations = 3;

struct HistoryStep {
  std::string url;
  std::string observation;
  std::string thought;
  std::string action;
  std::string outcome;
};

struct PolicyContext {
  std::string query;
  std::vector<std::string> memory;
  std::vector<const dsl::SkillProgram*> skills;  // callable, in any order
  std::vector<HistoryStep> history;
  std::string current_url;
  std::string current_observation;
};

struct JudgeContext {
  std::string query;
  std::vector<std::string> actions;
  std::string final_observation;
  std::optional<std::string> final_message;
};

struct InductionStep {
  std::string thought;
  std::string action;
};

struct InducerContext {
  std::string query;
  std::vector<InductionStep> steps;
  std::vector<const dsl::SkillProgram*> library;
};

std::string render_policy_prompt(const PolicyContext& ctx);
std::string render_judge_prompt(const JudgeContext& ctx);
std::string render_cleaner_prompt(std::string_view thought);
std::string render_inducer_prompt(const InducerContext& ctx);

/// Callable actions as listed to the policy: primitives, then skills by name.
std::string render_action_space(const std::vector<const dsl::SkillProgram*>& skills);

}  // namespace webskill::llm
