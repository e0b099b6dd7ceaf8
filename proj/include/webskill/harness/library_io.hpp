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

#include <filesystem>
#include <string>
#include <string_view>

#include "webskill/agent/library.hpp"
#include "webskill/agent/memory.hpp"

namespace webskill::harness {

inline constexpr std::string_view kLibrarySchema = "webskill.library";
inline constexpr std::string_view kMemorySchema = "webskill.memory";

class FormatError : public Error {
 public:
  using Error::Error;
};

/// JSONL: a header line, then one line per skill (active ones in name order,
/// then deprecated ones in deprecation order). `params` and `docstring` are
/// derived from `source` and ignored on load.
std::string library_to_jsonl(const agent::SkillLibrary& library);
/// Throws FormatError for bad structure, dsl::ParseError for bad skill source.
agent::SkillLibrary library_from_jsonl(std::string_view text);

void save_library(const agent::SkillLibrary& library, const std::filesystem::path& path);
agent::SkillLibrary load_library(const std::filesystem::path& path);

/// Copies `source` into a library for namespace `ns`. Skills keep their
/// status and record where they came from.
agent::SkillLibrary import_library(const agent::SkillLibrary& source, const std::string& ns);

std::string memory_to_jsonl(const agent::Memory& memory);
agent::Memory memory_from_jsonl(std::string_view text);

/// Writes `text` to `path`, creating parent directories.
void write_file(const std::filesystem::path& path, std::string_view text);
std::string read_file(const std::filesystem::path& path);

}  // namespace webskill::harness
