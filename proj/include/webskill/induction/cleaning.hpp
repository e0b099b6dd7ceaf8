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

#include <string>
#include <string_view>
#include <vector>

#include "webskill/agent/episode.hpp"
#include "webskill/llm/backend.hpp"

namespace webskill::induction {

struct CleanStep {
  std::string thought;  // one sentence, possibly empty
  dsl::Action action;
};

struct CleanEpisode {
  std::string episode_id;
  std::string query;
  std::vector<CleanStep> steps;
  /// Thoughts that fell back to first-sentence truncation.
  std::vector<std::string> notes;
};

/// Text up to and including the first sentence terminator, or the first line.
std::string first_sentence(std::string_view text);

/// Drops error steps and shortens each remaining thought with one cleaner
/// request. Empty thoughts are kept empty without a request. A reply that is
/// empty or spans several lines is replaced by first_sentence(thought).
CleanEpisode clean_episode(const agent::Episode& episode, llm::Backend& backend,
                           const llm::DecodingParams& decoding = {});

}  // namespace webskill::induction
