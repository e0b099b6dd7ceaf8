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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "webskill/agent/library.hpp"
#include "webskill/dsl/validator.hpp"
#include "webskill/induction/cleaning.hpp"
#include "webskill/llm/backend.hpp"

namespace webskill::induction {

/// Returns the callable arity range for a name, or nullopt when unknown.
using ArityLookup = std::function<std::optional<std::pair<std::size_t, std::size_t>>(std::string_view)>;

struct RewriteParse {
  std::vector<dsl::Action> actions;
  std::vector<std::string> diagnostics;  // why parsing stopped, if it did
};

/// One call per line with literal arguments. Blank and comment lines are
/// skipped. Parsing stops at the first line that is not a call, names an
/// unknown action, or has the wrong number of arguments.
RewriteParse parse_rewritten_trajectory(std::string_view code, const ArityLookup& known);

/// Primitives plus `resolver`'s skills.
ArityLookup arity_lookup(const dsl::SkillResolver& resolver);

/// Prefix ending at the last action for which `is_skill` holds; empty if none.
std::vector<dsl::Action> truncate_prefix(const std::vector<dsl::Action>& rewritten,
                                         const std::function<bool(const dsl::Action&)>& is_skill);
/// Same, treating every non-primitive name as a skill call.
std::vector<dsl::Action> truncate_prefix(const std::vector<dsl::Action>& rewritten);

struct RejectedSkill {
  std::string name;
  std::string source;
  std::vector<std::string> reasons;
};

struct InductionCandidate {
  std::string episode_id;
  std::string task_id;
  std::string query;
  std::vector<dsl::SkillProgram> skills;  // parsed and validated
  std::vector<RejectedSkill> rejected;
  std::string rewritten_text;
  std::vector<dsl::Action> rewritten;
  std::vector<dsl::Action> prefix;
  std::optional<std::string> void_reason;
  std::vector<std::string> diagnostics;
  std::string raw_output;

  bool is_void() const { return void_reason.has_value(); }
  std::vector<std::string> skill_names() const;
};

struct InductionOptions {
  dsl::StepBounds bounds;
  /// New skills may reuse the name of an imported skill.
  bool allow_update = false;
  llm::DecodingParams decoding;
};

/// One inducer request for one clean episode. Parse and validation problems
/// make the candidate void with diagnostics; only backend errors escape.
InductionCandidate induce(const CleanEpisode& clean, const agent::SkillLibrary& library, llm::Backend& backend,
                          const InductionOptions& options = {});

nlohmann::json candidate_to_json(const InductionCandidate& c);
/// Inverse of candidate_to_json; skills are re-parsed from their sources.
/// Throws Error on malformed documents.
InductionCandidate candidate_from_json(const nlohmann::json& j);

}  // namespace webskill::induction
