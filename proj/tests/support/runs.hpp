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

// Run configurations for the bundled replay suites.

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include <unistd.h>

#include "support/fixtures.hpp"
#include "webskill/harness/online.hpp"
#include "webskill/llm/prompts.hpp"

namespace webskill::testing {

inline harness::RunConfig suite_config(const std::string& site, const std::string& replay, agent::Mode mode,
                                       bool verify) {
  harness::RunConfig cfg;
  cfg.site_path = data_path("sites/" + site + ".json");
  cfg.tasks_path = data_path("tasks/" + site + ".json");
  cfg.backend = "scripted:" + data_path("replays/" + replay + ".jsonl");
  cfg.mode = mode;
  cfg.verify = verify;
  return cfg;
}

/// The four placement/verification cells.
struct Cell {
  const char* replay;
  agent::Mode mode;
  bool verify;
};

inline const std::vector<Cell>& ablation_cells() {
  static const std::vector<Cell> kCells = {
      {"shop_memory_text_off", agent::Mode::memory_text, false},
      {"shop_memory_text_on", agent::Mode::memory_text, true},
      {"shop_memory_program_on", agent::Mode::memory_program, true},
      {"shop_asi", agent::Mode::asi, true},
  };
  return kCells;
}

/// The action-space section of a policy prompt.
inline std::string action_space_section(const std::string& prompt) {
  const std::string head = "# Action space\n";
  auto start = prompt.find(head);
  if (start == std::string::npos) return {};
  start = prompt.find('\n', start + head.size()) + 1;  // skip the instruction line
  auto end = prompt.find("\n# ", start);
  return prompt.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

/// Every regular file under `dir`, relative path to contents.
inline std::vector<std::pair<std::string, std::string>> snapshot(const std::filesystem::path& dir) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) out.emplace_back(std::filesystem::relative(e.path(), dir).string(), read_file(e.path()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("webskill_" + std::to_string(getpid()) + "_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace webskill::testing
