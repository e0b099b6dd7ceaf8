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
#include <vector>

#include <json.hpp>

#include "webskill/harness/stats.hpp"

namespace webskill::harness {

inline constexpr std::string_view kRowsSchema = "webskill.rows";

struct TaskRow {
  std::string task_id;
  double success = 0;  // checkpoint fraction, or 0/1 from the judge
  std::size_t steps = 0;
  std::size_t skills_reused = 0;  // successful skill calls in the episode
  bool induction_attempted = false;
  bool induction_succeeded = false;
  std::string terminated_by;
  /// Skills the policy could call when the episode started.
  std::vector<std::string> callable_at_start;
  std::string error;  // non-empty when the task itself failed to run
  bool operator==(const TaskRow&) const = default;
};

struct Aggregates {
  std::size_t total = 0;
  double success_rate = 0;
  double mean_steps = 0;
  std::size_t attempted = 0;
  std::size_t succeeded = 0;
  std::size_t reuse_examples = 0;  // tasks with at least one reused skill
  bool operator==(const Aggregates&) const = default;
};

Aggregates aggregate(const std::vector<TaskRow>& rows);

struct RunReport {
  std::string site_id;
  std::string mode;
  bool verify = false;
  std::vector<TaskRow> rows;
  Aggregates aggregates;
  bool partial = false;
  std::string error;
};

nlohmann::json row_to_json(const TaskRow& row);
TaskRow row_from_json(const nlohmann::json& j);
nlohmann::json summary_to_json(const RunReport& report);

/// rows.jsonl and summary.json under `dir`.
void export_report(const RunReport& report, const std::filesystem::path& dir);
/// Reads a run directory back. Throws FormatError when the summary disagrees
/// with aggregates recomputed from the rows.
RunReport load_report(const std::filesystem::path& dir);

/// Attempted / successful induction and reuse counts per run.
struct SkillStats {
  std::size_t attempted = 0;
  std::size_t successful = 0;
  std::size_t reuse = 0;
  std::size_t total = 0;
  bool operator==(const SkillStats&) const = default;
};
SkillStats skill_stats(const std::vector<TaskRow>& rows);

enum class Metric { sr, steps };
std::vector<double> metric_values(const RunReport& report, Metric m);

struct Comparison {
  Aggregates a;
  Aggregates b;
  double delta_sr = 0;     // a - b
  double delta_steps = 0;  // a - b
  std::optional<TTestResult> sr_test;
  std::optional<TTestResult> steps_test;
  std::vector<std::string> notes;
};

Comparison compare_runs(const RunReport& a, const RunReport& b);
std::string render_comparison(const Comparison& c, const std::string& name_a, const std::string& name_b);
nlohmann::json comparison_to_json(const Comparison& c);

}  // namespace webskill::harness
