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

#include "webskill/dsl/parser.hpp"

namespace webskill::dsl::detail {

enum class Tok { name, string, number, op, newline, indent, dedent, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;  // decoded contents for strings, spelling otherwise
  double number = 0;
  bool integral = false;
  SourceLoc loc;

  bool is_op(std::string_view s) const { return kind == Tok::op && text == s; }
  bool is_name(std::string_view s) const { return kind == Tok::name && text == s; }
};

/// Tokenizes indentation-structured source. `first_line` offsets reported
/// locations so chunks of a larger document keep their original numbering.
std::vector<Token> tokenize(std::string_view source, int first_line = 1);

bool is_keyword(std::string_view word);

}  // namespace webskill::dsl::detail
