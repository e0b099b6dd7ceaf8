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
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "webskill/dsl/environment.hpp"
#include "webskill/dsl/interpreter.hpp"
#include "webskill/dsl/value.hpp"
#include "webskill/websim/state.hpp"

namespace webskill::agent {

enum class TerminatedBy {
  message,
  infeasible,
  max_steps,
  prefix_error,  // a forced prefix action failed; the episode stops there
};
std::string_view to_string(TerminatedBy t);

struct EpisodeStep {
  std::size_t idx = 0;
  std::string url;          // before the action
  std::string observation;  // before the action
  std::string thought;
  /// Absent when the policy output could not be parsed.
  std::optional<dsl::Action> action;
  std::string raw_response;
  dsl::StepOutcome outcome;
  dsl::Fingerprint before;
  dsl::Fingerprint after;
  bool skill_call = false;
  bool forced = false;  // executed from a forced prefix
  /// Flattened primitives of a skill call.
  std::optional<dsl::ExecutionTrace> trace;

  bool is_error() const { return outcome.is_error(); }
  bool is_parse_failure() const { return !action.has_value(); }
  std::string action_text() const { return action ? action->to_string() : std::string(); }
};

struct Episode {
  std::string task_id;
  std::string query;
  std::vector<EpisodeStep> steps;
  TerminatedBy terminated_by = TerminatedBy::max_steps;
  std::optional<std::string> final_message;
  std::string diagnostic;
  std::size_t prefix_length = 0;
  websim::EnvState final_state;
};

/// Agent-level actions that did not error. A skill call is one step.
std::size_t count_steps(const Episode& episode);

/// Actions that environment steps were spent on (everything but parse failures).
std::size_t consumed_steps(const Episode& episode);

/// Names of skills called by non-error steps, in first-call order.
std::vector<std::string> called_skills(const Episode& episode);

/// Canonical text of each executed (parsed) action.
std::vector<std::string> action_texts(const Episode& episode);

/// One log record per step: idx, thought, action, outcome, fingerprints.
nlohmann::json step_to_json(const EpisodeStep& step);
nlohmann::json episode_to_json(const Episode& episode);

}  // namespace webskill::agent
