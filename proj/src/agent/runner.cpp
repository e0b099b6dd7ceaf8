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

#include "webskill/agent/runner.hpp"

#include "webskill/dsl/primitives.hpp"
#include "webskill/llm/parsers.hpp"
#include "webskill/llm/prompts.hpp"
#include "webskill/websim/engine.hpp"

namespace webskill::agent {

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::vanilla: return "vanilla";
    case Mode::memory_text: return "memory_text";
    case Mode::memory_program: return "memory_program";
    case Mode::asi: return "asi";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view s) {
  for (Mode m : {Mode::vanilla, Mode::memory_text, Mode::memory_program, Mode::asi}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

int step_budget(const websim::Task& task, const AgentConfig& config) {
  return task.max_steps.value_or(config.max_steps);
}

namespace {

struct Termination {
  TerminatedBy by;
  std::optional<std::string> message;
};

std::optional<Termination> terminal_effect(const dsl::Action& a) {
  auto kind = dsl::find_primitive(a.name);
  if (!kind || !dsl::is_terminating(*kind)) return std::nullopt;
  std::optional<std::string> text;
  if (!a.args.empty()) text = a.args[0].is_string() ? a.args[0].as_string() : dsl::to_literal(a.args[0]);
  if (*kind == dsl::PrimitiveKind::send_msg_to_user) return Termination{TerminatedBy::message, text};
  return Termination{TerminatedBy::infeasible, text};
}

// Runs one agent-level action and fills the outcome fields of `step`.
// Returns the termination it caused, if any.
std::optional<Termination> execute(websim::WebEnvironment& env, const dsl::Action& action,
                                   const SkillLibrary& library, EpisodeStep& step) {
  step.before = env.fingerprint();
  if (dsl::find_primitive(action.name)) {
    step.outcome = env.step(action);
    step.after = env.fingerprint();
    if (step.outcome.is_error()) return std::nullopt;
    return terminal_effect(action);
  }

  step.skill_call = true;
  const dsl::SkillProgram* skill = library.find(action.name);
  if (!skill) {
    step.outcome = dsl::StepOutcome::failure(dsl::StepErrorKind::unknown_action, "no skill named '" + action.name + "'");
    step.after = env.fingerprint();
    return std::nullopt;
  }
  try {
    step.trace = dsl::interpret_call(*skill, action.args, env, library.resolver());
  } catch (const dsl::InterpretError& e) {
    step.trace = e.partial_trace();
    step.after = env.fingerprint();
    step.outcome = dsl::StepOutcome::failure(dsl::StepErrorKind::skill_runtime, e.kind() + ": " + e.what());
    return std::nullopt;
  }
  step.after = env.fingerprint();
  if (auto err = step.trace->final_error()) {
    step.outcome = dsl::StepOutcome::failure(
        dsl::StepErrorKind::skill_runtime,
        std::string(dsl::to_string(err->kind)) + " inside " + action.name + ": " + err->message);
    return std::nullopt;
  }
  step.outcome = step.after != step.before ? dsl::StepOutcome::ok() : dsl::StepOutcome::no_effect();
  for (const auto& t : step.trace->steps) {
    if (auto term = terminal_effect(t.action)) return term;
  }
  return std::nullopt;
}

std::string outcome_text(const dsl::StepOutcome& o) {
  std::string s(dsl::to_string(o.kind));
  if (o.error) s += " (" + std::string(dsl::to_string(o.error->kind)) + ": " + o.error->message + ")";
  return s;
}

}  // namespace

Episode run_episode(const websim::Task& task, std::shared_ptr<const websim::SiteSpec> site,
                    const AgentConfig& config, const SkillLibrary& library, const Memory& memory,
                    llm::Backend& backend, const std::optional<std::vector<dsl::Action>>& forced_prefix) {
  if (forced_prefix) {
    for (const auto& a : *forced_prefix) {
      if (!dsl::find_primitive(a.name) && !library.find(a.name)) {
        throw UnresolvedPrefix("forced prefix action '" + a.to_string() + "' is neither a primitive nor a library skill");
      }
    }
  }

  Episode ep;
  ep.task_id = task.task_id;
  ep.query = task.query;
  const int budget = step_budget(task, config);
  websim::WebEnvironment env(std::move(site));
  std::size_t consumed = 0;

  auto new_step = [&] {
    EpisodeStep s;
    s.idx = ep.steps.size();
    auto obs = env.observe();
    s.url = obs.url;
    s.observation = std::move(obs.text);
    return s;
  };
  auto finish = [&](TerminatedBy by, std::optional<std::string> msg = std::nullopt) {
    ep.terminated_by = by;
    ep.final_message = std::move(msg);
    ep.final_state = env.state();
    return ep;
  };

  if (forced_prefix) {
    for (const auto& a : *forced_prefix) {
      if (consumed >= static_cast<std::size_t>(budget)) return finish(TerminatedBy::max_steps);
      EpisodeStep s = new_step();
      s.action = a;
      s.forced = true;
      auto term = execute(env, a, library, s);
      ep.steps.push_back(std::move(s));
      ++consumed;
      ++ep.prefix_length;
      const auto& last = ep.steps.back();
      if (last.is_error()) {
        ep.diagnostic = "prefix action " + std::to_string(last.idx) + " " + a.to_string() +
                        " failed: " + outcome_text(last.outcome);
        return finish(TerminatedBy::prefix_error);
      }
      if (term) return finish(term->by, term->message);
    }
  }

  const bool skills_callable = config.mode == Mode::asi;
  llm::ActionNameCheck known = [&](std::string_view name) {
    return dsl::find_primitive(name).has_value() || (skills_callable && library.find(name) != nullptr);
  };
  int parse_failures = 0;
  while (consumed < static_cast<std::size_t>(budget)) {
    EpisodeStep s = new_step();
    llm::PolicyContext ctx;
    ctx.query = task.query;
    ctx.memory = memory.entries();
    if (skills_callable) ctx.skills = library.callable();
    for (const auto& prev : ep.steps) {
      ctx.history.push_back({prev.url, prev.observation, prev.thought,
                             prev.action ? prev.action->to_string() : "(unparseable) " + prev.raw_response,
                             outcome_text(prev.outcome)});
    }
    ctx.current_url = s.url;
    ctx.current_observation = s.observation;

    auto response = backend.complete({llm::PromptRole::policy, llm::render_policy_prompt(ctx), config.decoding});
    s.raw_response = response.text;
    try {
      auto parsed = llm::parse_policy_action(response.text, known);
      s.thought = std::move(parsed.thought);
      s.action = std::move(parsed.action);
    } catch (const llm::PolicyParseError& e) {
      s.thought = e.thought();
      s.before = s.after = env.fingerprint();
      s.outcome = dsl::StepOutcome::failure(dsl::StepErrorKind::parse_failure, e.what());
      ep.steps.push_back(std::move(s));
      if (++parse_failures >= config.parse_failure_budget) {
        ep.diagnostic = std::to_string(parse_failures) + " consecutive unparseable policy outputs";
        return finish(TerminatedBy::max_steps);
      }
      continue;
    }
    parse_failures = 0;
    auto term = execute(env, *s.action, library, s);
    ep.steps.push_back(std::move(s));
    ++consumed;
    if (term) return finish(term->by, term->message);
  }
  return finish(TerminatedBy::max_steps);
}

}  // namespace webskill::agent
