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

#include "webskill/agent/memory.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "webskill/dsl/printer.hpp"
#include "webskill/error.hpp"

namespace webskill::agent {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Parameter references outside string literals become {name}.
std::string templated(const std::string& line, const dsl::SkillProgram& skill) {
  std::string out;
  char quote = 0;
  for (std::size_t i = 0; i < line.size();) {
    char c = line[i];
    if (quote) {
      out += c;
      if (c == '\\' && i + 1 < line.size()) {
        out += line[i + 1];
        i += 2;
        continue;
      }
      if (c == quote) quote = 0;
      ++i;
      continue;
    }
    if (c == '\'' || c == '"') {
      quote = c;
      out += c;
      ++i;
      continue;
    }
    if (ident_char(c) && (i == 0 || !ident_char(line[i - 1]))) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      std::string word = line.substr(i, j - i);
      bool is_param = std::any_of(skill.params.begin(), skill.params.end(),
                                  [&](const dsl::Param& p) { return p.name == word; });
      out += is_param ? "{" + word + "}" : word;
      i = j;
      continue;
    }
    out += c;
    ++i;
  }
  return out;
}

}  // namespace

bool Memory::contains(const std::string& text) const {
  return std::find(entries_.begin(), entries_.end(), text) != entries_.end();
}

Memory add_to_memory(Memory memory, std::string entry) {
  if (entry.empty()) throw Error("memory entry must be non-empty");
  if (!memory.contains(entry)) memory.entries_.push_back(std::move(entry));
  return memory;
}

std::string render_text_skill(const dsl::SkillProgram& skill) {
  std::string title = skill.name;
  std::replace(title.begin(), title.end(), '_', ' ');
  if (!title.empty()) title[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(title[0])));

  std::ostringstream os;
  os << "## " << title << '\n';
  std::string purpose = skill.docstring.substr(0, skill.docstring.find('\n'));
  if (!purpose.empty()) os << purpose << '\n';
  if (!skill.params.empty()) {
    os << "Inputs:";
    for (const auto& p : skill.params) os << " {" << p.name << '}';
    os << '\n';
  }
  os << "Steps:\n";
  std::istringstream body(dsl::print_body(skill.body));
  std::string line;
  while (std::getline(body, line)) {
    std::size_t depth = line.find_first_not_of(' ');
    std::string text = line.substr(depth);
    os << std::string(depth / 2, ' ') << "- " << templated(text, skill) << '\n';
  }
  return os.str();
}

std::string render_program_skill(const dsl::SkillProgram& skill) {
  return std::string(kReferenceBanner) + "\n" + dsl::pretty_print(skill);
}

}  // namespace webskill::agent
