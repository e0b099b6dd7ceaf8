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

#include "webskill/induction/induction.hpp"

#include <algorithm>

#include "webskill/dsl/parser.hpp"
#include "webskill/dsl/primitives.hpp"
#include "webskill/llm/parsers.hpp"
#include "webskill/llm/prompts.hpp"

namespace webskill::induction {
namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

ArityLookup arity_lookup(const dsl::SkillResolver& resolver) {
  return [resolver](std::string_view name) -> std::optional<std::pair<std::size_t, std::size_t>> {
    if (auto kind = dsl::find_primitive(name)) {
      const auto& sig = dsl::signature_of(*kind);
      return std::pair{sig.min_arity(), sig.max_arity()};
    }
    if (const auto* s = resolver ? resolver(name) : nullptr) return std::pair{s->min_arity(), s->max_arity()};
    return std::nullopt;
  };
}

RewriteParse parse_rewritten_trajectory(std::string_view code, const ArityLookup& known) {
  RewriteParse out;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= code.size()) {
    std::size_t nl = code.find('\n', start);
    std::string line = trim(code.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
    start = nl == std::string_view::npos ? code.size() + 1 : nl + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::string where = "line " + std::to_string(line_no) + " `" + line + "`: ";
    dsl::Action action;
    try {
      action = dsl::parse_call_expression(line);
    } catch (const dsl::ParseError& e) {
      out.diagnostics.push_back(where + e.what());
      break;
    }
    auto arity = known(action.name);
    if (!arity) {
      out.diagnostics.push_back(where + "unknown action '" + action.name + "'");
      break;
    }
    if (action.args.size() < arity->first || action.args.size() > arity->second) {
      out.diagnostics.push_back(where + "'" + action.name + "' takes " + std::to_string(arity->first) + "-" +
                                std::to_string(arity->second) + " arguments, got " +
                                std::to_string(action.args.size()));
      break;
    }
    out.actions.push_back(std::move(action));
  }
  return out;
}

std::vector<dsl::Action> truncate_prefix(const std::vector<dsl::Action>& rewritten,
                                         const std::function<bool(const dsl::Action&)>& is_skill) {
  auto last = std::find_if(rewritten.rbegin(), rewritten.rend(), is_skill);
  if (last == rewritten.rend()) return {};
  return {rewritten.begin(), last.base()};
}

std::vector<dsl::Action> truncate_prefix(const std::vector<dsl::Action>& rewritten) {
  return truncate_prefix(rewritten, [](const dsl::Action& a) { return !dsl::find_primitive(a.name).has_value(); });
}

std::vector<std::string> InductionCandidate::skill_names() const {
  std::vector<std::string> out;
  for (const auto& s : skills) out.push_back(s.name);
  return out;
}

InductionCandidate induce(const CleanEpisode& clean, const agent::SkillLibrary& library, llm::Backend& backend,
                          const InductionOptions& options) {
  InductionCandidate cand;
  cand.episode_id = clean.episode_id;
  cand.task_id = clean.episode_id;
  cand.query = clean.query;
  if (clean.steps.empty()) {
    cand.void_reason = "clean episode has no steps";
    return cand;
  }

  llm::InducerContext ctx;
  ctx.query = clean.query;
  for (const auto& s : clean.steps) ctx.steps.push_back({s.thought, s.action.to_string()});
  ctx.library = library.callable();
  auto reply = backend.complete({llm::PromptRole::inducer, llm::render_inducer_prompt(ctx), options.decoding});
  cand.raw_output = reply.text;
  auto parsed = llm::parse_inducer_output(reply.text);

  std::vector<dsl::SkillProgram> pending;
  for (const auto& text : parsed.functions) {
    auto result = dsl::parse_skill_source(text);
    for (const auto& e : result.errors) {
      cand.rejected.push_back({e.definition, text, {std::string(dsl::to_string(e.kind)) + ": " + e.message}});
    }
    for (auto& s : result.skills) {
      auto reject = [&](std::string why) { cand.rejected.push_back({s.name, s.source, {std::move(why)}}); };
      if (dsl::find_primitive(s.name)) {
        reject("name-collision: '" + s.name + "' is a primitive");
        continue;
      }
      if (std::any_of(pending.begin(), pending.end(), [&](const auto& p) { return p.name == s.name; })) {
        reject("name-collision: defined twice in one output");
        continue;
      }
      if (const auto* existing = library.find(s.name)) {
        bool may_shadow = options.allow_update && !existing->imported_from.empty();
        if (!may_shadow) {
          reject("name-collision: '" + s.name + "' is already in the library");
          continue;
        }
      }
      s.ns = library.ns();
      s.origin_episode = clean.episode_id;
      s.status = dsl::SkillStatus::candidate;
      pending.push_back(std::move(s));
    }
  }

  // Skills may call each other, so drop invalid ones until the rest agree.
  bool changed = true;
  while (changed) {
    changed = false;
    auto resolver = agent::overlay_resolver(library, pending);
    for (std::size_t i = 0; i < pending.size(); ++i) {
      auto report = dsl::validate_skill(pending[i], resolver, options.bounds);
      if (report.ok()) continue;
      RejectedSkill r{pending[i].name, pending[i].source, {}};
      for (const auto& v : report.violations) r.reasons.push_back(v.rule + ": " + v.message);
      cand.rejected.push_back(std::move(r));
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  cand.skills = std::move(pending);
  for (const auto& r : cand.rejected) {
    std::string reasons;
    for (const auto& why : r.reasons) reasons += (reasons.empty() ? "" : "; ") + why;
    cand.diagnostics.push_back("rejected skill '" + r.name + "': " + reasons);
  }

  if (!parsed.rewritten.empty()) {
    cand.rewritten_text = parsed.rewritten.front().code;
    auto rw = parse_rewritten_trajectory(cand.rewritten_text,
                                         arity_lookup(agent::overlay_resolver(library, cand.skills)));
    cand.rewritten = std::move(rw.actions);
    for (auto& d : rw.diagnostics) cand.diagnostics.push_back("rewrite stopped at " + d);
  }
  cand.prefix = truncate_prefix(cand.rewritten);

  if (cand.skills.empty()) {
    cand.void_reason = parsed.functions.empty() ? "inducer produced no functions" : "no valid skills";
  } else if (parsed.rewritten.empty()) {
    cand.void_reason = "no rewritten trajectory";
  } else if (cand.prefix.empty()) {
    cand.void_reason = "rewritten trajectory calls no skill";
  }
  return cand;
}

namespace {

nlohmann::json action_list(const std::vector<dsl::Action>& actions) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& a : actions) out.push_back(a.to_string());
  return out;
}

std::vector<dsl::Action> parse_actions(const nlohmann::json& j) {
  std::vector<dsl::Action> out;
  for (const auto& a : j) out.push_back(dsl::parse_call_expression(a.get<std::string>()));
  return out;
}

}  // namespace

nlohmann::json candidate_to_json(const InductionCandidate& c) {
  nlohmann::json skills = nlohmann::json::array();
  for (const auto& s : c.skills) skills.push_back(s.source);
  nlohmann::json rejected = nlohmann::json::array();
  for (const auto& r : c.rejected) rejected.push_back({{"name", r.name}, {"source", r.source}, {"reasons", r.reasons}});
  nlohmann::json j{{"episode_id", c.episode_id},
                   {"task_id", c.task_id},
                   {"query", c.query},
                   {"skills", std::move(skills)},
                   {"rejected", std::move(rejected)},
                   {"rewritten_text", c.rewritten_text},
                   {"rewritten", action_list(c.rewritten)},
                   {"prefix", action_list(c.prefix)},
                   {"diagnostics", c.diagnostics}};
  j["void_reason"] = c.void_reason ? nlohmann::json(*c.void_reason) : nlohmann::json();
  return j;
}

InductionCandidate candidate_from_json(const nlohmann::json& j) {
  try {
    InductionCandidate c;
    c.episode_id = j.value("episode_id", "");
    c.task_id = j.value("task_id", c.episode_id);
    c.query = j.at("query").get<std::string>();
    for (const auto& src : j.at("skills")) {
      auto s = dsl::parse_single_skill(src.get<std::string>());
      s.origin_episode = c.episode_id;
      c.skills.push_back(std::move(s));
    }
    for (const auto& r : j.value("rejected", nlohmann::json::array())) {
      c.rejected.push_back({r.at("name"), r.value("source", ""), r.value("reasons", std::vector<std::string>{})});
    }
    c.rewritten_text = j.value("rewritten_text", "");
    c.rewritten = parse_actions(j.value("rewritten", nlohmann::json::array()));
    c.prefix = parse_actions(j.at("prefix"));
    c.diagnostics = j.value("diagnostics", std::vector<std::string>{});
    if (j.contains("void_reason") && !j["void_reason"].is_null()) c.void_reason = j["void_reason"].get<std::string>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed candidate: ") + e.what());
  }
}

}  // namespace webskill::induction
