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

#include "webskill/induction/cleaning.hpp"

#include <cctype>

#include "webskill/llm/prompts.hpp"

namespace webskill::induction {
namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Removes one layer of quoting the model may echo back from the prompt.
std::string unquote(std::string s) {
  for (std::string_view q : {"'''", "\"\"\"", "\"", "'", "`"}) {
    if (s.size() >= 2 * q.size() && s.starts_with(q) && s.ends_with(q)) {
      return trim(std::string_view(s).substr(q.size(), s.size() - 2 * q.size()));
    }
  }
  return s;
}

}  // namespace

std::string first_sentence(std::string_view text) {
  std::string t = trim(text);
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    if (c == '\n') return trim(std::string_view(t).substr(0, i));
    if ((c == '.' || c == '!' || c == '?') && (i + 1 == t.size() || std::isspace(static_cast<unsigned char>(t[i + 1])))) {
      return t.substr(0, i + 1);
    }
  }
  return t;
}

CleanEpisode clean_episode(const agent::Episode& episode, llm::Backend& backend, const llm::DecodingParams& decoding) {
  CleanEpisode out;
  out.episode_id = episode.task_id;
  out.query = episode.query;
  for (const auto& s : episode.steps) {
    if (s.is_error() || !s.action) continue;
    CleanStep step{{}, *s.action};
    std::string thought = trim(s.thought);
    if (!thought.empty()) {
      auto reply = backend.complete({llm::PromptRole::cleaner, llm::render_cleaner_prompt(thought), decoding});
      std::string summary = unquote(trim(reply.text));
      if (summary.empty() || summary.find('\n') != std::string::npos) {
        out.notes.push_back("step " + std::to_string(s.idx) + ": cleaner reply unusable, kept first sentence");
        summary = first_sentence(thought);
      }
      step.thought = std::move(summary);
    }
    out.steps.push_back(std::move(step));
  }
  return out;
}

}  // namespace webskill::induction
