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

#include "webskill/llm/parsers.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>

#include "webskill/dsl/parser.hpp"

namespace webskill::llm {

namespace {

struct Block {
  std::size_t open = 0;   // offset of the opening fence
  std::size_t close = 0;  // offset just past the closing fence line
  std::string body;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Block> find_blocks(std::string_view text) {
  std::vector<Block> blocks;
  std::size_t pos = 0;
  std::optional<Block> open;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    bool fence = trim(line).starts_with("```");
    if (fence && !open) {
      open = Block{pos, 0, ""};
    } else if (fence) {
      open->close = std::min(end + 1, text.size());
      blocks.push_back(std::move(*open));
      open.reset();
    } else if (open) {
      open->body.append(line);
      open->body += '\n';
    }
    pos = end + 1;
  }
  return blocks;
}

bool looks_like_call(std::string_view line) {
  static const std::regex kCall(R"(^\s*[A-Za-z_][A-Za-z0-9_]*\s*\(.*\)\s*;?\s*$)");
  return std::regex_match(line.begin(), line.end(), kCall);
}

std::string strip_trailing_comment(std::string_view line) {
  // Only a '#' outside quotes starts a comment.
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quote) {
      if (c == '\\') ++i;
      else if (c == quote) quote = 0;
    } else if (c == '\'' || c == '"') {
      quote = c;
    } else if (c == '#') {
      return std::string(trim(line.substr(0, i)));
    }
  }
  return std::string(trim(line));
}

PolicyAction finish(std::string thought, const std::string& call, const ActionNameCheck& known) {
  std::string expr = call;
  if (!expr.empty() && expr.back() == ';') expr.pop_back();
  auto paren = expr.find('(');
  std::string name(trim(std::string_view(expr).substr(0, paren)));
  if (!known(name)) {
    throw PolicyParseError(PolicyParseErrorKind::unknown_action_name, "'" + name + "' is not an available action",
                           thought);
  }
  try {
    return {std::move(thought), dsl::parse_call_expression(expr)};
  } catch (const dsl::ParseError& e) {
    throw PolicyParseError(PolicyParseErrorKind::argument_parse_error, e.what(), thought);
  }
}

}  // namespace

std::string_view to_string(PolicyParseErrorKind k) {
  switch (k) {
    case PolicyParseErrorKind::no_action_found: return "NoActionFound";
    case PolicyParseErrorKind::unknown_action_name: return "UnknownActionName";
    case PolicyParseErrorKind::argument_parse_error: return "ArgumentParseError";
  }
  return "";
}

std::vector<std::string> fenced_blocks(std::string_view text) {
  std::vector<std::string> out;
  for (auto& b : find_blocks(text)) out.push_back(std::move(b.body));
  return out;
}

PolicyAction parse_policy_action(std::string_view text, const ActionNameCheck& known) {
  auto blocks = find_blocks(text);
  if (!blocks.empty()) {
    const Block& last = blocks.back();
    std::string thought(trim(text.substr(0, last.open)));
    auto lines = split_lines(last.body);
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
      std::string line = strip_trailing_comment(*it);
      if (looks_like_call(line)) return finish(std::move(thought), line, known);
    }
  }
  auto lines = split_lines(text);
  std::size_t offset = text.size();
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
    offset -= it->size();
    std::string line = strip_trailing_comment(*it);
    if (looks_like_call(line)) {
      std::string thought(trim(text.substr(0, offset)));
      return finish(std::move(thought), line, known);
    }
    if (offset > 0) --offset;
  }
  throw PolicyParseError(PolicyParseErrorKind::no_action_found, "no action call in output", std::string(trim(text)));
}

JudgeVerdict parse_judge_verdict(std::string_view text) {
  auto lines = split_lines(text);
  std::optional<std::size_t> status_line;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string lowered(trim(lines[i]));
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lowered.starts_with("status:") || lowered.starts_with("**status:**") || lowered.starts_with("**status**:")) {
      status_line = i;
    }
  }
  if (!status_line) throw UnparseableVerdict("no Status line in judge output");
  std::string value(trim(lines[*status_line]));
  value = value.substr(value.find(':') + 1);
  std::string cleaned;
  for (char c : value) {
    if (std::isalpha(static_cast<unsigned char>(c))) cleaned += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  JudgeVerdict v;
  if (cleaned == "success") {
    v.success = true;
  } else if (cleaned != "failure") {
    throw UnparseableVerdict("unrecognized status '" + std::string(trim(value)) + "'");
  }
  std::string thoughts;
  for (std::size_t i = 0; i < *status_line; ++i) {
    std::string_view line = trim(lines[i]);
    if (line.empty()) continue;
    if (line.size() >= 9 && std::equal(line.begin(), line.begin() + 9, "Thoughts:")) line = trim(line.substr(9));
    if (!thoughts.empty()) thoughts += '\n';
    thoughts += line;
  }
  v.thoughts = std::move(thoughts);
  return v;
}

InducerOutput parse_inducer_output(std::string_view text) {
  InducerOutput out;
  std::size_t prose_start = 0;
  for (const auto& block : find_blocks(text)) {
    std::string_view prose = text.substr(prose_start, block.open - prose_start);
    prose_start = block.close;
    auto lines = split_lines(block.body);
    bool has_def = std::any_of(lines.begin(), lines.end(), [](std::string_view l) { return l.starts_with("def "); });
    if (has_def) {
      std::string current;
      for (auto line : lines) {
        if (line.starts_with("def ") && !trim(current).empty()) {
          out.functions.push_back(std::string(trim(current)) + "\n");
          current.clear();
        }
        if (line.starts_with("def ") || !current.empty()) {
          current.append(line);
          current += '\n';
        }
      }
      if (!trim(current).empty()) out.functions.push_back(std::string(trim(current)) + "\n");
      continue;
    }
    std::string instruction;
    auto prose_lines = split_lines(prose);
    for (auto it = prose_lines.rbegin(); it != prose_lines.rend(); ++it) {
      if (!trim(*it).empty()) {
        instruction = std::string(trim(*it));
        break;
      }
    }
    out.rewritten.push_back({std::move(instruction), block.body});
  }
  return out;
}

}  // namespace webskill::llm
