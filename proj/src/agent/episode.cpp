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

#include "webskill/agent/episode.hpp"

#include <algorithm>

namespace webskill::agent {

std::string_view to_string(TerminatedBy t) {
  switch (t) {
    case TerminatedBy::message: return "message";
    case TerminatedBy::infeasible: return "infeasible";
    case TerminatedBy::max_steps: return "max_steps";
    case TerminatedBy::prefix_error: return "prefix_error";
  }
  return "?";
}

std::size_t count_steps(const Episode& episode) {
  return static_cast<std::size_t>(
      std::count_if(episode.steps.begin(), episode.steps.end(), [](const EpisodeStep& s) { return !s.is_error(); }));
}

std::size_t consumed_steps(const Episode& episode) {
  return static_cast<std::size_t>(std::count_if(episode.steps.begin(), episode.steps.end(),
                                                [](const EpisodeStep& s) { return !s.is_parse_failure(); }));
}

std::vector<std::string> called_skills(const Episode& episode) {
  std::vector<std::string> out;
  for (const auto& s : episode.steps) {
    if (!s.skill_call || s.is_error()) continue;
    if (std::find(out.begin(), out.end(), s.action->name) == out.end()) out.push_back(s.action->name);
  }
  return out;
}

std::vector<std::string> action_texts(const Episode& episode) {
  std::vector<std::string> out;
  for (const auto& s : episode.steps) {
    if (s.action) out.push_back(s.action->to_string());
  }
  return out;
}

nlohmann::json step_to_json(const EpisodeStep& step) {
  nlohmann::json j{{"idx", step.idx},
                   {"url", step.url},
                   {"thought", step.thought},
                   {"action", step.action_text()},
                   {"outcome", std::string(dsl::to_string(step.outcome.kind))},
                   {"fingerprint_before", step.before.hex()},
                   {"fingerprint_after", step.after.hex()},
                   {"skill_call", step.skill_call},
                   {"forced", step.forced}};
  if (step.outcome.error) {
    j["error"] = {{"kind", std::string(dsl::to_string(step.outcome.error->kind))},
                  {"message", step.outcome.error->message}};
  }
  if (step.is_parse_failure()) j["raw_response"] = step.raw_response;
  if (step.trace) {
    nlohmann::json flat = nlohmann::json::array();
    for (const auto& t : step.trace->steps) {
      nlohmann::json r{{"action", t.action.to_string()}, {"before", t.before.hex()}, {"after", t.after.hex()}};
      if (t.error) r["error"] = std::string(dsl::to_string(t.error->kind));
      flat.push_back(std::move(r));
    }
    j["trace"] = std::move(flat);
  }
  return j;
}

nlohmann::json episode_to_json(const Episode& episode) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : episode.steps) steps.push_back(step_to_json(s));
  nlohmann::json j{{"task_id", episode.task_id},
                   {"query", episode.query},
                   {"terminated_by", std::string(to_string(episode.terminated_by))},
                   {"steps", std::move(steps)},
                   {"count_steps", count_steps(episode)},
                   {"prefix_length", episode.prefix_length},
                   {"urls", episode.final_state.url_log}};
  j["final_message"] = episode.final_message ? nlohmann::json(*episode.final_message) : nlohmann::json();
  if (!episode.diagnostic.empty()) j["diagnostic"] = episode.diagnostic;
  return j;
}

}  // namespace webskill::agent
