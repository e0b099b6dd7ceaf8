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

#include "webskill/verification/verifier.hpp"

#include <algorithm>

#include "webskill/dsl/validator.hpp"

namespace webskill::verification {
namespace {

// Adds candidates reachable from `names` through calls between candidates.
std::set<std::string> close_over_candidates(std::set<std::string> names,
                                            const std::vector<dsl::SkillProgram>& skills) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : skills) {
      if (!names.count(s.name)) continue;
      for (const auto& callee : dsl::direct_callees(s)) {
        bool is_candidate = std::any_of(skills.begin(), skills.end(), [&](const auto& c) { return c.name == callee; });
        if (is_candidate && names.insert(callee).second) grew = true;
      }
    }
  }
  return names;
}

}  // namespace

void finalize(VerificationReport& report) {
  report.passed = report.correctness && report.skill_usage && report.skill_validity;
}

VerificationReport evaluate_checks(const agent::Episode& full, const induction::InductionCandidate& candidate,
                                   const EpisodeVerdict& verdict) {
  VerificationReport r;
  r.verdict = verdict;
  r.correctness = verdict.success;
  r.prefix_length = full.prefix_length;
  for (const auto& s : full.steps) {
    if (s.action) r.full_trajectory.push_back(s.action->to_string());
  }
  r.continuation_length = full.steps.size() - full.prefix_length;

  auto names = candidate.skill_names();
  std::set<std::string> used;
  r.skill_validity = true;
  for (const auto& s : full.steps) {
    if (!s.skill_call) continue;
    SkillCallRecord rec{s.idx, s.action_text(), s.before, s.after, s.is_error()};
    if (rec.error) {
      r.skill_validity = false;
      r.diagnostics.push_back("skill call " + rec.action + " at step " + std::to_string(s.idx) + " errored: " +
                              s.outcome.error->message);
    } else if (!rec.changed()) {
      r.skill_validity = false;
      r.diagnostics.push_back("skill call " + rec.action + " at step " + std::to_string(s.idx) +
                              " left the page unchanged");
    }
    if (!rec.error && std::find(names.begin(), names.end(), s.action->name) != names.end()) {
      used.insert(s.action->name);
    }
    r.skill_calls.push_back(std::move(rec));
  }
  r.skill_usage = !used.empty();
  if (!r.skill_usage) r.diagnostics.push_back("no new skill was called successfully");
  if (!r.correctness) r.diagnostics.push_back("judge: " + verdict.thoughts);
  r.called_candidates = close_over_candidates(std::move(used), candidate.skills);
  finalize(r);
  return r;
}

VerificationReport verify_candidate(const websim::Task& task, std::shared_ptr<const websim::SiteSpec> site,
                                    const induction::InductionCandidate& candidate, const agent::AgentConfig& config,
                                    const agent::SkillLibrary& library, llm::Backend& backend, JudgeKind judge,
                                    agent::Episode* episode_out) {
  VerificationReport failed;
  if (candidate.is_void() || candidate.prefix.empty()) {
    failed.diagnostics.push_back("void candidate: " + candidate.void_reason.value_or("empty prefix"));
    return failed;
  }
  agent::SkillLibrary trial = library.provisional(candidate.skills);
  agent::Episode ep;
  try {
    ep = agent::run_episode(task, site, config, trial, {}, backend, candidate.prefix);
  } catch (const agent::UnresolvedPrefix& e) {
    failed.diagnostics.push_back(e.what());
    return failed;
  }
  if (episode_out) *episode_out = ep;

  const std::size_t budget = static_cast<std::size_t>(agent::step_budget(task, config));
  if (agent::consumed_steps(ep) > budget) {
    throw std::logic_error("verification run exceeded its step budget");
  }

  EpisodeVerdict verdict;
  verdict.episode_id = ep.task_id;
  if (ep.terminated_by == agent::TerminatedBy::prefix_error) {
    verdict.source = "prefix";
    verdict.thoughts = ep.diagnostic;
  } else {
    verdict = judge_episode(ep, task, *site, judge, backend, config.decoding);
  }
  auto report = evaluate_checks(ep, candidate, verdict);
  if (ep.terminated_by == agent::TerminatedBy::prefix_error) {
    report.passed = false;
    report.diagnostics.insert(report.diagnostics.begin(), "prefix failed: " + ep.diagnostic);
  }
  return report;
}

GateOutcome gate_and_commit(const VerificationReport& report, const induction::InductionCandidate& candidate,
                            const agent::SkillLibrary& library, bool allow_update) {
  GateOutcome out{library, {}, std::nullopt};
  bool all_checks = report.correctness && report.skill_usage && report.skill_validity;
  if (!report.passed || !all_checks) {
    out.diagnostic = "verification failed; nothing committed";
    return out;
  }
  try {
    out.library = agent::commit_skills(library, candidate.skills, report.called_candidates, allow_update);
  } catch (const Error& e) {
    out.diagnostic = e.what();
    return out;
  }
  for (const auto& s : candidate.skills) {
    if (report.called_candidates.count(s.name)) out.committed.push_back(s.name);
  }
  return out;
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json calls = nlohmann::json::array();
  for (const auto& c : r.skill_calls) {
    calls.push_back({{"idx", c.idx},
                     {"action", c.action},
                     {"before", c.before.hex()},
                     {"after", c.after.hex()},
                     {"changed", c.changed()},
                     {"error", c.error}});
  }
  nlohmann::json j{{"correctness", r.correctness},
                   {"skill_usage", r.skill_usage},
                   {"skill_validity", r.skill_validity},
                   {"passed", r.passed},
                   {"full_trajectory", r.full_trajectory},
                   {"prefix_length", r.prefix_length},
                   {"continuation_length", r.continuation_length},
                   {"skill_calls", std::move(calls)},
                   {"called_candidates", r.called_candidates},
                   {"diagnostics", r.diagnostics}};
  if (r.verdict) {
    j["verdict"] = {{"success", r.verdict->success}, {"source", r.verdict->source}, {"thoughts", r.verdict->thoughts}};
    if (r.verdict->score) j["verdict"]["score"] = *r.verdict->score;
  }
  return j;
}

}  // namespace webskill::verification
