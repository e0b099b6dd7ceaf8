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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "webskill/agent/runner.hpp"
#include "webskill/induction/induction.hpp"
#include "webskill/verification/judge.hpp"

namespace webskill::verification {

struct SkillCallRecord {
  std::size_t idx = 0;
  std::string action;
  dsl::Fingerprint before;
  dsl::Fingerprint after;
  bool error = false;
  bool changed() const { return before != after; }
};

struct VerificationReport {
  bool correctness = false;
  bool skill_usage = false;
  bool skill_validity = false;
  bool passed = false;
  std::vector<std::string> full_trajectory;  // canonical action texts
  std::size_t prefix_length = 0;
  std::size_t continuation_length = 0;
  std::vector<SkillCallRecord> skill_calls;
  /// Candidate skills used in the run, closed over calls between candidates.
  std::set<std::string> called_candidates;
  std::vector<std::string> diagnostics;
  std::optional<EpisodeVerdict> verdict;
};

/// Combines the three checks. The only way a report passes.
void finalize(VerificationReport& report);

/// Replays the task from a fresh reset with the candidate's prefix forced,
/// lets the policy continue within the remaining budget, then runs the three
/// checks. Void candidates, prefix errors and unresolved prefixes produce a
/// failed report; backend errors propagate.
VerificationReport verify_candidate(const websim::Task& task, std::shared_ptr<const websim::SiteSpec> site,
                                    const induction::InductionCandidate& candidate, const agent::AgentConfig& config,
                                    const agent::SkillLibrary& library, llm::Backend& backend,
                                    JudgeKind judge = JudgeKind::automatic,
                                    agent::Episode* episode_out = nullptr);

/// Checks over an already executed full trajectory.
VerificationReport evaluate_checks(const agent::Episode& full, const induction::InductionCandidate& candidate,
                                   const EpisodeVerdict& verdict);

struct GateOutcome {
  agent::SkillLibrary library;
  std::vector<std::string> committed;
  std::optional<std::string> diagnostic;
};

/// Commits the candidate skills that were called, only for a passed report.
GateOutcome gate_and_commit(const VerificationReport& report, const induction::InductionCandidate& candidate,
                            const agent::SkillLibrary& library, bool allow_update = false);

nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace webskill::verification
