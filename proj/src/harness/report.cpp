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

#include "webskill/harness/report.hpp"

#include <cstdio>
#include <sstream>

#include "webskill/harness/library_io.hpp"

namespace webskill::harness {

using nlohmann::json;

Aggregates aggregate(const std::vector<TaskRow>& rows) {
  Aggregates a;
  a.total = rows.size();
  double sr = 0, steps = 0;
  for (const auto& r : rows) {
    sr += r.success;
    steps += static_cast<double>(r.steps);
    a.attempted += r.induction_attempted;
    a.succeeded += r.induction_succeeded;
    a.reuse_examples += r.skills_reused > 0;
  }
  if (a.total) {
    a.success_rate = sr / static_cast<double>(a.total);
    a.mean_steps = steps / static_cast<double>(a.total);
  }
  return a;
}

json row_to_json(const TaskRow& r) {
  json j{{"task_id", r.task_id},
         {"success", r.success},
         {"steps", r.steps},
         {"skills_reused", r.skills_reused},
         {"induction_attempted", r.induction_attempted},
         {"induction_succeeded", r.induction_succeeded},
         {"terminated_by", r.terminated_by},
         {"callable_at_start", r.callable_at_start}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

TaskRow row_from_json(const json& j) {
  TaskRow r;
  r.task_id = j.at("task_id").get<std::string>();
  r.success = j.at("success").get<double>();
  r.steps = j.at("steps").get<std::size_t>();
  r.skills_reused = j.at("skills_reused").get<std::size_t>();
  r.induction_attempted = j.at("induction_attempted").get<bool>();
  r.induction_succeeded = j.at("induction_succeeded").get<bool>();
  r.terminated_by = j.value("terminated_by", "");
  r.callable_at_start = j.value("callable_at_start", std::vector<std::string>{});
  r.error = j.value("error", "");
  return r;
}

namespace {

json aggregates_to_json(const Aggregates& a) {
  return {{"total", a.total},       {"success_rate", a.success_rate}, {"mean_steps", a.mean_steps},
          {"attempted", a.attempted}, {"succeeded", a.succeeded},       {"reuse_examples", a.reuse_examples}};
}

Aggregates aggregates_from_json(const json& j) {
  Aggregates a;
  a.total = j.at("total").get<std::size_t>();
  a.success_rate = j.at("success_rate").get<double>();
  a.mean_steps = j.at("mean_steps").get<double>();
  a.attempted = j.at("attempted").get<std::size_t>();
  a.succeeded = j.at("succeeded").get<std::size_t>();
  a.reuse_examples = j.at("reuse_examples").get<std::size_t>();
  return a;
}

json ttest_json(const std::optional<TTestResult>& t) {
  if (!t) return nullptr;
  return {{"t", t->t_stat}, {"df", t->degrees_of_freedom}, {"p", t->p_value}, {"significant", t->significant()}};
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

json summary_to_json(const RunReport& report) {
  auto stats = skill_stats(report.rows);
  return {{"schema", "webskill.summary"},
          {"version", 1},
          {"site_id", report.site_id},
          {"mode", report.mode},
          {"verify", report.verify},
          {"partial", report.partial},
          {"error", report.error},
          {"aggregates", aggregates_to_json(report.aggregates)},
          {"skill_stats",
           {{"attempted", stats.attempted}, {"successful", stats.successful}, {"reuse", stats.reuse}, {"total", stats.total}}}};
}

void export_report(const RunReport& report, const std::filesystem::path& dir) {
  std::string rows = json{{"schema", kRowsSchema}, {"version", 1}}.dump() + "\n";
  for (const auto& r : report.rows) rows += row_to_json(r).dump() + "\n";
  write_file(dir / "rows.jsonl", rows);
  write_file(dir / "summary.json", summary_to_json(report).dump(2) + "\n");
}

RunReport load_report(const std::filesystem::path& dir) {
  RunReport report;
  try {
    std::istringstream in(read_file(dir / "rows.jsonl"));
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = json::parse(line);
      if (header) {
        if (j.value("schema", "") != kRowsSchema) throw FormatError("rows.jsonl: missing schema header");
        header = false;
        continue;
      }
      report.rows.push_back(row_from_json(j));
    }
    if (header) throw FormatError("rows.jsonl: empty file");
    auto summary = json::parse(read_file(dir / "summary.json"));
    report.site_id = summary.value("site_id", "");
    report.mode = summary.value("mode", "");
    report.verify = summary.value("verify", false);
    report.partial = summary.value("partial", false);
    report.error = summary.value("error", "");
    report.aggregates = aggregates_from_json(summary.at("aggregates"));
  } catch (const json::exception& e) {
    throw FormatError(dir.string() + ": " + e.what());
  }
  if (!(aggregate(report.rows) == report.aggregates)) {
    throw FormatError(dir.string() + ": summary aggregates do not match rows");
  }
  return report;
}

SkillStats skill_stats(const std::vector<TaskRow>& rows) {
  auto a = aggregate(rows);
  return {a.attempted, a.succeeded, a.reuse_examples, a.total};
}

std::vector<double> metric_values(const RunReport& report, Metric m) {
  std::vector<double> out;
  for (const auto& r : report.rows) out.push_back(m == Metric::sr ? r.success : static_cast<double>(r.steps));
  return out;
}

Comparison compare_runs(const RunReport& a, const RunReport& b) {
  Comparison c;
  c.a = a.aggregates;
  c.b = b.aggregates;
  c.delta_sr = c.a.success_rate - c.b.success_rate;
  c.delta_steps = c.a.mean_steps - c.b.mean_steps;
  auto test = [&](Metric m, const char* name) -> std::optional<TTestResult> {
    auto xs = metric_values(a, m);
    auto ys = metric_values(b, m);
    try {
      return welch_t_test(xs, ys);
    } catch (const DegenerateSample& e) {
      c.notes.push_back(std::string(name) + " t-test not applicable: " + e.what());
      return std::nullopt;
    }
  };
  c.sr_test = test(Metric::sr, "sr");
  c.steps_test = test(Metric::steps, "steps");
  return c;
}

std::string render_comparison(const Comparison& c, const std::string& name_a, const std::string& name_b) {
  auto t_cells = [](const std::optional<TTestResult>& t) {
    if (!t) return std::string("| n/a | n/a | n/a |");
    return "| " + fixed(t->t_stat, 4) + " | " + fixed(t->p_value, 4) + " | " + (t->significant() ? "yes" : "no") + " |";
  };
  std::ostringstream os;
  os << "| metric | " << name_a << " | " << name_b << " | delta | t | p | significant |\n";
  os << "|---|---|---|---|---|---|---|\n";
  os << "| SR | " << fixed(c.a.success_rate, 4) << " | " << fixed(c.b.success_rate, 4) << " | "
     << fixed(c.delta_sr, 4) << " " << t_cells(c.sr_test) << "\n";
  os << "| steps | " << fixed(c.a.mean_steps, 4) << " | " << fixed(c.b.mean_steps, 4) << " | "
     << fixed(c.delta_steps, 4) << " " << t_cells(c.steps_test) << "\n";
  for (const auto& n : c.notes) os << "\n" << n << "\n";
  return os.str();
}

json comparison_to_json(const Comparison& c) {
  return {{"a", aggregates_to_json(c.a)}, {"b", aggregates_to_json(c.b)},   {"delta_sr", c.delta_sr},
          {"delta_steps", c.delta_steps}, {"sr_ttest", ttest_json(c.sr_test)}, {"steps_ttest", ttest_json(c.steps_test)},
          {"notes", c.notes}};
}

}  // namespace webskill::harness
