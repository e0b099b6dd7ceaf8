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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace webskill::websim {

enum class CheckpointKind {
  message_contains,
  url_visited,
  element_value_equals,
  flag_equals,
  flag_list_contains,
};
std::string_view to_string(CheckpointKind k);

/// One intermediate goal of a task. Fields unused by `kind` stay empty.
struct CheckpointSpec {
  std::string id;
  CheckpointKind kind = CheckpointKind::message_contains;
  std::vector<std::string> substrings;
  bool require_all = true;
  std::string url;
  std::string page;
  std::string bid;
  std::string name;
  std::string value;
  double weight = 1.0;
};

struct Task {
  std::string task_id;
  std::string site_id;
  std::string query;
  std::vector<CheckpointSpec> checkpoints;
  std::optional<int> max_steps;
};

/// Task files are JSON arrays of task objects.
std::vector<Task> load_tasks(std::string_view document);
std::vector<Task> load_task_file(const std::filesystem::path& path);

}  // namespace webskill::websim
