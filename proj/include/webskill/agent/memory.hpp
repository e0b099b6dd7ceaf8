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
#include <vector>

#include "webskill/dsl/ast.hpp"

namespace webskill::agent {

inline constexpr std::string_view kReferenceBanner = "# reference only - not callable";

/// Reference text shown to the policy. Append-only within a run.
class Memory {
 public:
  const std::vector<std::string>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(const std::string& text) const;

 private:
  friend Memory add_to_memory(Memory memory, std::string entry);
  std::vector<std::string> entries_;
};

/// Appends unless an identical entry exists. Throws Error on empty text.
Memory add_to_memory(Memory memory, std::string entry);

/// Skill as a prose workflow: title, purpose, and its steps with parameters
/// written as {name}.
std::string render_text_skill(const dsl::SkillProgram& skill);

/// Pretty-printed source under a banner marking it as non-callable.
std::string render_program_skill(const dsl::SkillProgram& skill);

}  // namespace webskill::agent
