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

#include "webskill/dsl/ast.hpp"
#include "webskill/error.hpp"

namespace webskill::dsl {

enum class ParseErrorKind { syntax_error, unsupported_construct };
std::string_view to_string(ParseErrorKind kind);

/// Thrown by the single-expression entry points.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, SourceLoc loc, const std::string& message);
  ParseErrorKind kind() const { return kind_; }
  SourceLoc loc() const { return loc_; }

 private:
  ParseErrorKind kind_;
  SourceLoc loc_;
};

/// A failure attributed to one definition; siblings are unaffected.
struct SkillParseError {
  ParseErrorKind kind;
  std::string definition;  // function name, or "<module>" for stray top-level code
  SourceLoc loc;
  std::string message;
};

struct SkillParseResult {
  std::vector<SkillProgram> skills;
  std::vector<SkillParseError> errors;
};

/// Parses zero or more `def` blocks. Each definition is parsed on its own,
/// keeping its verbatim text in SkillProgram::source.
SkillParseResult parse_skill_source(std::string_view text);

/// Convenience for sources known to hold exactly one valid definition.
/// Throws ParseError otherwise.
SkillProgram parse_single_skill(std::string_view text);

/// Parses `name(arg, ...)` where every argument is a literal.
Action parse_call_expression(std::string_view text);

/// Strips common leading indentation and surrounding blank lines.
std::string clean_docstring(std::string_view raw);

}  // namespace webskill::dsl
