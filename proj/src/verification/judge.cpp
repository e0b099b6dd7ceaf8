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

#include "webskill/verification/judge.hpp"

#include "webskill/llm/parsers.hpp"
#include "webskill/llm/prompts.hpp"
#include "webskill/verification/checkpoint.hpp"
#include "webskill/websim/engine.hpp"

namespace webskill::verification {

std::string_view to_string(JudgeKind k) {
  switch (k) {
    case JudgeKind::lm: return "lm";
    case JudgeKind::checkpoints: return "checkpoints";
    case JudgeKind::automatic: return "auto";
  }
  return "?";
}

std::optional<JudgeKind> parse_judge_kind(std::string_view s) {
  for (JudgeKind k : {JudgeKind::lm, JudgeKind::checkpoints, JudgeKind::automatic}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

EpisodeVerdict judge_episode(const agent::Episode& episode, const websim::Task& task, const websim::SiteSpec& site,
                             JudgeKind kind, llm::Backend& backend, const llm::DecodingParams& decoding) {
  EpisodeVerdict v;
  v.episode_id = episode.task_id;
  if (agent::count_steps(episode) == 0) {
    v.source = "empty";
    v.thoughts = "no action succeeded";
    return v;
  }
  if (kind == JudgeKind::automatic) kind = task.checkpoints.empty() ? JudgeKind::lm : JudgeKind::checkpoints;

  if (kind == JudgeKind::checkpoints) {
    v.source = "checkpoints";
    if (task.checkpoints.empty()) {
      v.thoughts = "task has no checkpoints";
      return v;
    }
    v.score = checkpoint_score(episode, site, task.checkpoints);
    v.success = *v.score == 1.0;
    for (const auto& c : task.checkpoints) {
      v.thoughts += (v.thoughts.empty() ? "" : "; ") + c.id + "=" +
                    (checkpoint_passes(c, episode, site) ? "pass" : "fail");
    }
    return v;
  }

  v.source = "lm";
  llm::JudgeContext ctx;
  ctx.query = episode.query;
  for (const auto& s : episode.steps) {
    if (s.action && !s.is_error()) ctx.actions.push_back(s.action->to_string());
  }
  ctx.final_observation = websim::observe(episode.final_state, site).text;
  ctx.final_message = episode.final_message;
  auto reply = backend.complete({llm::PromptRole::judge, llm::render_judge_prompt(ctx), decoding});
  try {
    auto verdict = llm::parse_judge_verdict(reply.text);
    v.success = verdict.success;
    v.thoughts = verdict.thoughts;
  } catch (const llm::UnparseableVerdict& e) {
    v.success = false;
    v.thoughts = std::string("unparseable verdict: ") + e.what();
  }
  return v;
}

}  // namespace webskill::verification
