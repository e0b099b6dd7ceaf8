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

#include "webskill/dsl/ast.hpp"

namespace webskill::dsl {

/// Looks up callable skills by name; returns nullptr when absent.
using SkillResolver = std::function<const SkillProgram*(std::string_view)>;

struct StepBounds {
  std::size_t min_steps = 2;
  std::size_t max_steps = 5;
};

struct Violation {
  std::string rule;  // step-count, unknown-callee, acyclicity, unused-param, ...
  std::string message;
  SourceLoc loc;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(std::string_view rule) const;
};

/// Static checks for an induced skill against the callable library.
/// Violations are returned as data; nothing is thrown.
ValidationReport validate_skill(const SkillProgram& skill, const SkillResolver& library,
                                StepBounds bounds = {});

/// Names of skills called anywhere in the body (not transitively).
std::vector<std::string> direct_callees(const SkillProgram& skill);

/// True when the skills reachable through `resolver` form no call cycle.
/// `names` are the roots to start from.
bool call_graph_acyclic(const std::vector<std::string>& names, const SkillResolver& resolver);

}  // namespace webskill::dsl
