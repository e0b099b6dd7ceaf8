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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "webskill/agent/runner.hpp"
#include "webskill/harness/report.hpp"
#include "webskill/llm/backend.hpp"
#include "webskill/verification/judge.hpp"

namespace webskill::harness {

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::filesystem::path site_path;
  std::filesystem::path tasks_path;
  agent::Mode mode = agent::Mode::asi;
  bool verify = true;
  std::string backend;  // scripted:FILE or http:URL
  int max_steps = 10;
  std::optional<std::filesystem::path> import_library;
  bool allow_update = false;
  std::filesystem::path out_dir;  // empty: write nothing
  std::uint64_t seed = 0;         // recorded; the loop itself draws no random numbers
  verification::JudgeKind judge = verification::JudgeKind::automatic;
};

/// Accepts vanilla, memory_text with either verify setting, memory_program
/// with verify and asi with verify. Throws ConfigError otherwise.
void validate(const RunConfig& config);

/// Config as recorded in the manifest; the output directory is left out so
/// identical runs into different directories hash the same.
nlohmann::json config_to_json(const RunConfig& config);
std::string config_hash(const RunConfig& config);

struct RunResult {
  RunReport report;
  agent::SkillLibrary library;
  agent::Memory memory;
  std::vector<agent::Episode> episodes;
};

/// Processes the tasks in file order. Each task's skills become visible from
/// the next task on. Backend errors stop the run and flag the report partial;
/// other per-task errors are recorded on the row. Artifacts are written to
/// config.out_dir when it is set, including after an abort.
RunResult run_online(const RunConfig& config, llm::Backend& backend);

/// Builds the backend from config.backend.
RunResult run_online(const RunConfig& config);

}  // namespace webskill::harness
