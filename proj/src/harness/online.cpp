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

#include "webskill/harness/online.hpp"

#include <cstdio>

#include "webskill/harness/library_io.hpp"
#include "webskill/induction/cleaning.hpp"
#include "webskill/induction/induction.hpp"
#include "webskill/verification/checkpoint.hpp"
#include "webskill/verification/verifier.hpp"
#include "webskill/websim/site.hpp"
#include "webskill/websim/task.hpp"

namespace webskill::harness {

using nlohmann::json;

void validate(const RunConfig& config) {
  using agent::Mode;
  if (config.max_steps < 1) throw ConfigError("max steps must be at least 1");
  if (config.site_path.empty() || config.tasks_path.empty()) throw ConfigError("site and tasks are required");
  if ((config.mode == Mode::asi || config.mode == Mode::memory_program) && !config.verify) {
    throw ConfigError(std::string(agent::to_string(config.mode)) + " requires verification");
  }
  if (config.allow_update && !config.import_library) throw ConfigError("--allow-update needs --import-library");
}

json config_to_json(const RunConfig& c) {
  json j{{"site", c.site_path.generic_string()},
         {"tasks", c.tasks_path.generic_string()},
         {"mode", std::string(agent::to_string(c.mode))},
         {"verify", c.verify},
         {"backend", c.backend},
         {"max_steps", c.max_steps},
         {"allow_update", c.allow_update},
         {"seed", c.seed},
         {"judge", std::string(verification::to_string(c.judge))}};
  j["import_library"] = c.import_library ? json(c.import_library->generic_string()) : json();
  return j;
}

std::string config_hash(const RunConfig& config) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : config_to_json(config).dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

constexpr std::string_view kEpisodesSchema = "webskill.episodes";

struct Artifacts {
  std::string episodes = json{{"schema", kEpisodesSchema}, {"version", 1}}.dump() + "\n";
  std::vector<std::pair<std::string, json>> candidates;
};

std::vector<std::string> names_of(const agent::SkillLibrary& lib) {
  std::vector<std::string> out;
  for (const auto* s : lib.callable()) out.push_back(s->name);
  return out;
}

void write_artifacts(const RunConfig& config, const RunResult& result, const Artifacts& art,
                     const std::string& backend_id) {
  if (config.out_dir.empty()) return;
  const auto& dir = config.out_dir;
  json manifest{{"schema", "webskill.manifest"},
                {"version", 1},
                {"config", config_to_json(config)},
                {"config_hash", config_hash(config)},
                {"backend_id", backend_id},
                {"partial", result.report.partial}};
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  write_file(dir / "episodes.jsonl", art.episodes);
  export_report(result.report, dir);
  save_library(result.library, dir / "library.jsonl");
  write_file(dir / "memory.jsonl", memory_to_jsonl(result.memory));
  std::filesystem::remove_all(dir / "candidates");
  std::filesystem::create_directories(dir / "candidates");
  for (const auto& [task_id, doc] : art.candidates) {
    write_file(dir / "candidates" / (task_id + ".json"), doc.dump(2) + "\n");
  }
}

}  // namespace

RunResult run_online(const RunConfig& config, llm::Backend& backend) {
  validate(config);
  auto site = websim::load_site_file(config.site_path);
  auto tasks = websim::load_task_file(config.tasks_path);

  RunResult result;
  result.report.site_id = site->site_id;
  result.report.mode = std::string(agent::to_string(config.mode));
  result.report.verify = config.verify;
  result.library = config.import_library ? import_library(load_library(*config.import_library), site->site_id)
                                         : agent::SkillLibrary(site->site_id);

  agent::AgentConfig agent_cfg;
  agent_cfg.max_steps = config.max_steps;
  agent_cfg.mode = config.mode;
  agent_cfg.verify_induction = config.verify;
  induction::InductionOptions ind_opts;
  ind_opts.allow_update = config.allow_update;

  const bool asi = config.mode == agent::Mode::asi;
  Artifacts art;

  for (const auto& task : tasks) {
    TaskRow row;
    row.task_id = task.task_id;
    if (asi) row.callable_at_start = names_of(result.library);
    try {
      auto ep = agent::run_episode(task, site, agent_cfg, result.library, result.memory, backend);
      row.steps = agent::count_steps(ep);
      row.terminated_by = std::string(agent::to_string(ep.terminated_by));
      for (const auto& s : ep.steps) {
        if (s.skill_call && !s.is_error()) {
          ++row.skills_reused;
          result.library.note_call(s.action->name);
        }
      }
      auto verdict = verification::judge_episode(ep, task, *site, config.judge, backend, agent_cfg.decoding);
      row.success = task.checkpoints.empty() ? (verdict.success ? 1.0 : 0.0)
                                             : verification::checkpoint_score(ep, *site, task.checkpoints);

      json ep_json = agent::episode_to_json(ep);
      ep_json["callable_at_start"] = row.callable_at_start;
      ep_json["memory_size"] = result.memory.size();
      ep_json["verdict"] = {{"success", verdict.success}, {"source", verdict.source}, {"thoughts", verdict.thoughts}};
      art.episodes += ep_json.dump() + "\n";
      result.episodes.push_back(ep);

      if (verdict.success && config.mode != agent::Mode::vanilla) {
        row.induction_attempted = true;
        auto clean = induction::clean_episode(ep, backend, agent_cfg.decoding);
        auto cand = induction::induce(clean, result.library, backend, ind_opts);
        json doc{{"candidate", induction::candidate_to_json(cand)}, {"cleaning_notes", clean.notes}};
        std::vector<std::string> placed;

        if (!cand.is_void()) {
          if (config.verify) {
            agent::Episode vep;
            auto report = verification::verify_candidate(task, site, cand, agent_cfg, result.library, backend,
                                                         config.judge, &vep);
            doc["report"] = verification::report_to_json(report);
            doc["verification_episode"] = agent::episode_to_json(vep);
            if (asi) {
              auto gate = verification::gate_and_commit(report, cand, result.library, config.allow_update);
              result.library = std::move(gate.library);
              placed = gate.committed;
              if (gate.diagnostic) doc["gate_diagnostic"] = *gate.diagnostic;
            } else if (report.passed) {
              for (const auto& s : cand.skills) {
                if (!report.called_candidates.count(s.name)) continue;
                auto text = config.mode == agent::Mode::memory_text ? agent::render_text_skill(s)
                                                                    : agent::render_program_skill(s);
                result.memory = agent::add_to_memory(std::move(result.memory), text);
                placed.push_back(s.name);
              }
            }
          } else {
            for (const auto& s : cand.skills) {
              result.memory = agent::add_to_memory(std::move(result.memory), agent::render_text_skill(s));
              placed.push_back(s.name);
            }
          }
        }
        row.induction_succeeded = !placed.empty();
        doc["placed"] = placed;
        doc["placement"] = asi ? "actions" : "memory";
        art.candidates.emplace_back(task.task_id, std::move(doc));
      }
    } catch (const llm::BackendError& e) {
      row.error = e.what();
      result.report.rows.push_back(row);
      result.report.partial = true;
      result.report.error = "task " + task.task_id + ": " + e.what();
      break;
    } catch (const Error& e) {
      row.error = e.what();
    }
    result.report.rows.push_back(std::move(row));
  }

  result.report.aggregates = aggregate(result.report.rows);
  write_artifacts(config, result, art, backend.id());
  return result;
}

RunResult run_online(const RunConfig& config) {
  validate(config);
  auto backend = llm::make_backend(config.backend);
  return run_online(config, *backend);
}

}  // namespace webskill::harness
