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

// Command-line front end: run, verify, stats, ttest, compare.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "webskill/harness/library_io.hpp"
#include "webskill/harness/online.hpp"
#include "webskill/harness/report.hpp"
#include "webskill/harness/stats.hpp"
#include "webskill/induction/induction.hpp"
#include "webskill/verification/verifier.hpp"
#include "webskill/websim/site.hpp"
#include "webskill/websim/task.hpp"

namespace {

using namespace webskill;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInfra = 2;

std::string format(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct RunArgs {
  std::string site, tasks, mode = "asi", backend, verify = "on", import_library, out, judge = "auto";
  int max_steps = 10;
  bool allow_update = false;
  std::uint64_t seed = 0;
};

int cmd_run(const RunArgs& a) {
  harness::RunConfig cfg;
  cfg.site_path = a.site;
  cfg.tasks_path = a.tasks;
  auto mode = agent::parse_mode(a.mode);
  if (!mode) throw harness::ConfigError("unknown mode '" + a.mode + "'");
  cfg.mode = *mode;
  cfg.verify = a.verify == "on";
  cfg.backend = a.backend;
  cfg.max_steps = a.max_steps;
  if (!a.import_library.empty()) cfg.import_library = a.import_library;
  cfg.allow_update = a.allow_update;
  cfg.out_dir = a.out;
  cfg.seed = a.seed;
  auto judge = verification::parse_judge_kind(a.judge);
  if (!judge) throw harness::ConfigError("unknown judge '" + a.judge + "'");
  cfg.judge = *judge;

  auto result = harness::run_online(cfg);
  const auto& ag = result.report.aggregates;
  std::cout << "tasks " << ag.total << "  SR " << format(ag.success_rate) << "  mean steps " << format(ag.mean_steps)
            << "  induced " << ag.succeeded << "/" << ag.attempted << "  reuse " << ag.reuse_examples
            << "  library " << result.library.size() << "\n";
  if (result.report.partial) {
    std::cerr << "run aborted: " << result.report.error << "\n";
    return kExitInfra;
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string candidate, site, tasks, task, backend, library, mode = "asi", judge = "auto", out;
  int max_steps = 10;
};

int cmd_verify(const VerifyArgs& a) {
  auto cand = induction::candidate_from_json(json::parse(harness::read_file(a.candidate)));
  auto site = websim::load_site_file(a.site);
  auto tasks = websim::load_task_file(a.tasks);
  std::string task_id = a.task.empty() ? cand.task_id : a.task;
  const websim::Task* task = nullptr;
  for (const auto& t : tasks) {
    if (t.task_id == task_id) task = &t;
  }
  if (!task) throw Error("no task '" + task_id + "' in " + a.tasks);
  agent::SkillLibrary lib = a.library.empty() ? agent::SkillLibrary(site->site_id) : harness::load_library(a.library);
  agent::AgentConfig cfg;
  cfg.max_steps = a.max_steps;
  auto mode = agent::parse_mode(a.mode);
  auto judge = verification::parse_judge_kind(a.judge);
  if (!mode || !judge) throw harness::ConfigError("bad --mode or --judge");
  cfg.mode = *mode;
  auto backend = llm::make_backend(a.backend);
  auto report = verification::verify_candidate(*task, site, cand, cfg, lib, *backend, *judge);
  auto doc = verification::report_to_json(report);
  if (!a.out.empty()) harness::write_file(a.out, doc.dump(2) + "\n");
  std::cout << doc.dump(2) << "\n";
  return report.passed ? kExitPass : kExitFail;
}

int cmd_stats(const std::string& dir) {
  auto report = harness::load_report(dir);
  auto s = harness::skill_stats(report.rows);
  const auto& ag = report.aggregates;
  std::cout << "site " << report.site_id << "  mode " << report.mode << (report.verify ? "+verify" : "") << "\n";
  std::cout << "tasks " << ag.total << "  SR " << format(ag.success_rate) << "  mean steps " << format(ag.mean_steps)
            << "\n";
  std::cout << "attempted " << s.attempted << "  successful " << s.successful << "  reuse " << s.reuse << "  total "
            << s.total << "\n";
  return kExitPass;
}

int cmd_ttest(const std::string& a, const std::string& b, const std::string& metric) {
  harness::Metric m;
  if (metric == "sr") {
    m = harness::Metric::sr;
  } else if (metric == "steps") {
    m = harness::Metric::steps;
  } else {
    throw harness::ConfigError("--metric must be sr or steps");
  }
  auto xs = harness::metric_values(harness::load_report(a), m);
  auto ys = harness::metric_values(harness::load_report(b), m);
  harness::TTestResult r;
  try {
    r = harness::welch_t_test(xs, ys);
  } catch (const harness::DegenerateSample& e) {
    std::cout << "t-test not applicable: " << e.what() << "\n";
    return kExitFail;
  }
  std::cout << "t " << format(r.t_stat) << "  df " << format(r.degrees_of_freedom) << "  p " << format(r.p_value)
            << "  n " << r.n1 << "/" << r.n2 << "  significant " << (r.significant() ? "yes" : "no") << "\n";
  return kExitPass;
}

int cmd_compare(const std::string& a, const std::string& b, const std::string& out) {
  auto c = harness::compare_runs(harness::load_report(a), harness::load_report(b));
  auto table = harness::render_comparison(c, a, b);
  std::cout << table;
  if (!out.empty()) {
    harness::write_file(std::filesystem::path(out) / "comparison.md", table);
    harness::write_file(std::filesystem::path(out) / "comparison.json", harness::comparison_to_json(c).dump(2) + "\n");
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online skill induction for simulated web agents"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a task suite online");
  run_cmd->add_option("--site", run.site, "Site spec file")->required();
  run_cmd->add_option("--tasks", run.tasks, "Task file")->required();
  run_cmd->add_option("--mode", run.mode, "vanilla | memory_text | memory_program | asi");
  run_cmd->add_option("--backend", run.backend, "scripted:FILE or http:URL")->required();
  run_cmd->add_option("--max-steps", run.max_steps, "Step budget per episode");
  run_cmd->add_option("--verify", run.verify, "on | off")->check(CLI::IsMember({"on", "off"}));
  run_cmd->add_option("--import-library", run.import_library, "Library file to start from");
  run_cmd->add_flag("--allow-update", run.allow_update, "Let new skills replace imported ones");
  run_cmd->add_option("--judge", run.judge, "auto | lm | checkpoints");
  run_cmd->add_option("--seed", run.seed, "Recorded in the manifest");
  run_cmd->add_option("--out", run.out, "Output directory")->required();

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Verify one induction candidate");
  ver_cmd->add_option("--candidate", ver.candidate, "Candidate file")->required();
  ver_cmd->add_option("--site", ver.site, "Site spec file")->required();
  ver_cmd->add_option("--tasks", ver.tasks, "Task file")->required();
  ver_cmd->add_option("--task", ver.task, "Task id (default: the candidate's)");
  ver_cmd->add_option("--backend", ver.backend, "scripted:FILE or http:URL")->required();
  ver_cmd->add_option("--library", ver.library, "Library the candidate extends");
  ver_cmd->add_option("--mode", ver.mode, "Agent mode for the continuation");
  ver_cmd->add_option("--judge", ver.judge, "auto | lm | checkpoints");
  ver_cmd->add_option("--max-steps", ver.max_steps, "Step budget");
  ver_cmd->add_option("--out", ver.out, "Write the report here");

  std::string stats_dir;
  auto* stats_cmd = app.add_subcommand("stats", "Summarize a run directory");
  stats_cmd->add_option("dir", stats_dir)->required();

  std::string ta, tb, metric = "sr";
  auto* tt_cmd = app.add_subcommand("ttest", "Welch t-test between two runs");
  tt_cmd->add_option("--a", ta)->required();
  tt_cmd->add_option("--b", tb)->required();
  tt_cmd->add_option("--metric", metric, "sr | steps");

  std::string ca, cb, cout_dir;
  auto* cmp_cmd = app.add_subcommand("compare", "Compare two run directories");
  cmp_cmd->add_option("a", ca)->required();
  cmp_cmd->add_option("b", cb)->required();
  cmp_cmd->add_option("--out", cout_dir, "Write comparison.md and comparison.json here");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run_cmd) return cmd_run(run);
    if (*ver_cmd) return cmd_verify(ver);
    if (*stats_cmd) return cmd_stats(stats_dir);
    if (*tt_cmd) return cmd_ttest(ta, tb, metric);
    if (*cmp_cmd) return cmd_compare(ca, cb, cout_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfra;
  }
  return kExitInfra;
}
