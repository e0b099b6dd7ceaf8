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

#include "webskill/agent/episode.hpp"
#include "webskill/llm/backend.hpp"
#include "webskill/websim/site.hpp"
#include "webskill/websim/task.hpp"

namespace webskill::verification {

enum class JudgeKind {
  lm,
  checkpoints,
  automatic,  // checkpoints when the task has any, otherwise lm
};
std::string_view to_string(JudgeKind k);
std::optional<JudgeKind> parse_judge_kind(std::string_view s);

struct EpisodeVerdict {
  std::string episode_id;
  bool success = false;
  std::string thoughts;
  std::string source;  // "lm", "checkpoints" or "empty"
  std::optional<double> score;
};

/// An episode with no successful step fails without consulting anyone.
/// Unparseable judge output is a failure.
EpisodeVerdict judge_episode(const agent::Episode& episode, const websim::Task& task, const websim::SiteSpec& site,
                             JudgeKind kind, llm::Backend& backend, const llm::DecodingParams& decoding = {});

}  // namespace webskill::verification
