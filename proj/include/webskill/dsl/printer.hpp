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

#include "webskill/dsl/ast.hpp"

namespace webskill::dsl {

/// Canonical source for a skill. Reparsing the output yields a structurally
/// equal program.
std::string pretty_print(const SkillProgram& skill);

std::string print_expr(const Expr& e);
/// Statements at the given indentation level (4 spaces each).
std::string print_body(const std::vector<Statement>& body, int indent = 0);
std::string print_condition(const Condition& c);
/// `name(a: str, b=None)` without the `def` keyword.
std::string print_signature(const SkillProgram& skill);

}  // namespace webskill::dsl
