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
#include <string>
#include <string_view>
#include <vector>

#include "webskill/dsl/value.hpp"
#include "webskill/error.hpp"

namespace webskill::llm {

enum class PolicyParseErrorKind { no_action_found, unknown_action_name, argument_parse_error };
std::string_view to_string(PolicyParseErrorKind k);

class PolicyParseError : public Error {
 public:
  PolicyParseError(PolicyParseErrorKind kind, const std::string& message, std::string thought)
      : Error(std::string(to_string(kind)) + ": " + message), kind_(kind), thought_(std::move(thought)) {}
  PolicyParseErrorKind kind() const { return kind_; }
  const std::string& thought() const { return thought_; }

 private:
  PolicyParseErrorKind kind_;
  std::string thought_;
};

struct PolicyAction {
  std::string thought;
  dsl::Action action;
};

/// True when `name` is callable in the current action space.
using ActionNameCheck = std::function<bool(std::string_view)>;

/// The action is the last call in the last fenced block, or failing that the
/// last line shaped like `name(...)`. Text before it is the thought.
PolicyAction parse_policy_action(std::string_view text, const ActionNameCheck& known);

struct JudgeVerdict {
  std::string thoughts;
  bool success = false;
};

class UnparseableVerdict : public Error {
 public:
  using Error::Error;
};

JudgeVerdict parse_judge_verdict(std::string_view text);

struct RewrittenExample {
  std::string instruction;
  std::string code;
};

struct InducerOutput {
  std::vector<std::string> functions;  // one source text per top-level def
  std::vector<RewrittenExample> rewritten;
};

/// Fenced blocks holding `def` lines are function sources; the others are
/// rewritten trajectories, labelled by the prose line just above them.
InducerOutput parse_inducer_output(std::string_view text);

/// Fenced code blocks in order, without the fence lines.
std::vector<std::string> fenced_blocks(std::string_view text);

}  // namespace webskill::llm
