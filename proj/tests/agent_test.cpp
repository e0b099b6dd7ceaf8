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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/scripted.hpp"
#include "webskill/agent/episode.hpp"
#include "webskill/agent/library.hpp"
#include "webskill/agent/memory.hpp"
#include "webskill/agent/runner.hpp"
#include "webskill/dsl/parser.hpp"
#include "webskill/dsl/primitives.hpp"

namespace webskill::agent {
namespace {

using testing::data_path;
using testing::read_file;

dsl::SkillProgram reference_skill(const std::string& name) {
  return dsl::parse_single_skill(read_file(data_path("skills/reference/" + name + ".py")));
}

SkillLibrary admin_library() {
  SkillLibrary lib("mini_admin");
  return commit_skills(lib, {reference_skill("open_marketing_reviews"), reference_skill("search_reviews")},
                       {"open_marketing_reviews", "search_reviews"});
}

const websim::Task& find_task(const std::vector<websim::Task>& tasks, const std::string& id) {
  for (const auto& t : tasks) {
    if (t.task_id == id) return t;
  }
  throw std::runtime_error("no task " + id);
}

void expect_terminal_last(const Episode& ep) {
  for (std::size_t i = 0; i < ep.steps.size(); ++i) {
    const auto& s = ep.steps[i];
    if (!s.action || s.is_error()) continue;
    auto kind = dsl::find_primitive(s.action->name);
    if (kind && dsl::is_terminating(*kind)) {
      EXPECT_EQ(i + 1, ep.steps.size()) << "action after terminal step";
    }
  }
}

TEST(RunEpisode, ForcedPrefixThenMessage) {
  auto site = testing::load_site("mini_admin");
  auto tasks = testing::load_site_tasks("mini_admin");
  auto lib = admin_library();
  auto backend = testing::scripted_policy({"The count is 2.\n```\nsend_msg_to_user('2')\n```"});
  std::vector<dsl::Action> prefix = {{"open_marketing_reviews", {}}, {"search_reviews", {"757", "1239", "satisfied"}}};
  AgentConfig cfg;
  auto ep = run_episode(find_task(tasks, "admin-01"), site, cfg, lib, {}, *backend, prefix);
  ASSERT_EQ(ep.steps.size(), 3u);
  EXPECT_EQ(count_steps(ep), 3u);
  EXPECT_EQ(ep.terminated_by, TerminatedBy::message);
  EXPECT_EQ(ep.final_message, "2");
  EXPECT_EQ(ep.prefix_length, 2u);
  EXPECT_TRUE(ep.steps[0].forced && ep.steps[0].skill_call);
  EXPECT_EQ(ep.steps[0].trace->steps.size(), 2u);
  EXPECT_EQ(ep.steps[1].trace->steps.size(), 3u);
  EXPECT_NE(ep.steps[1].before, ep.steps[1].after);
  EXPECT_EQ(ep.final_state.current_url(), "/admin/reviews");
  EXPECT_EQ(called_skills(ep), (std::vector<std::string>{"open_marketing_reviews", "search_reviews"}));
  // The skill appears as callable in the policy prompt.
  auto prompt = backend->requests().at(0).prompt;
  EXPECT_NE(prompt.find("- search_reviews("), std::string::npos);
  expect_terminal_last(ep);
}

TEST(RunEpisode, BudgetOfOneStopsAfterNoop) {
  auto site = testing::load_site("mini_shop");
  websim::Task task{"t", "mini_shop", "do nothing", {}, 1};
  auto backend = testing::scripted_policy({"noop()", "noop()"});
  auto ep = run_episode(task, site, {}, SkillLibrary("mini_shop"), {}, *backend);
  EXPECT_EQ(ep.terminated_by, TerminatedBy::max_steps);
  EXPECT_EQ(ep.steps.size(), 1u);
  EXPECT_EQ(backend->remaining(llm::PromptRole::policy), 1u);
}

TEST(RunEpisode, VanillaMugSearch) {
  auto site = testing::load_site("mini_shop");
  auto tasks = testing::load_site_tasks("mini_shop");
  auto backend = testing::scripted_policy({
      "Type the product name.\n```\nfill('101', 'mug')\n```",
      "Run the search.\n```\nclick('102')\n```",
      "Open the mug.\n```\nclick('p-mug')\n```",
      "Report the price.\n```\nsend_msg_to_user('12.99')\n```",
  });
  AgentConfig cfg;
  cfg.mode = Mode::vanilla;
  auto ep = run_episode(find_task(tasks, "shop-01"), site, cfg, SkillLibrary("mini_shop"), {}, *backend);
  EXPECT_EQ(count_steps(ep), 4u);
  EXPECT_EQ(ep.terminated_by, TerminatedBy::message);
  EXPECT_EQ(ep.final_state.message_log, std::vector<std::string>{"12.99"});
  for (const auto& s : ep.steps) EXPECT_FALSE(s.is_error()) << s.action_text();
  EXPECT_EQ(ep.steps[2].url, "/search");
  // Each step's observation is the page the previous action produced.
  EXPECT_NE(backend->requests()[1].prompt.find("fill('101', 'mug')"), std::string::npos);
}

TEST(RunEpisode, ParseFailuresDoNotConsumeBudget) {
  auto site = testing::load_site("mini_shop");
  websim::Task task{"t", "mini_shop", "q", {}, 3};
  auto backend = testing::scripted_policy(
      {"hmm", "click('110')", "not sure", "still thinking", "click('111')", "send_msg_to_user('done')"});
  auto ep = run_episode(task, site, {}, SkillLibrary("mini_shop"), {}, *backend);
  EXPECT_EQ(ep.steps.size(), 6u);
  EXPECT_EQ(count_steps(ep), 3u);
  EXPECT_EQ(consumed_steps(ep), 3u);
  EXPECT_EQ(ep.terminated_by, TerminatedBy::message);
  EXPECT_EQ(ep.steps[0].outcome.error->kind, dsl::StepErrorKind::parse_failure);
  EXPECT_EQ(ep.steps[0].before, ep.steps[0].after);
}

TEST(RunEpisode, ConsecutiveParseFailuresEndEpisode) {
  auto site = testing::load_site("mini_shop");
  websim::Task task{"t", "mini_shop", "q", {}, 10};
  auto backend = testing::scripted_policy({"a", "b", "c", "d", "e", "click('110')"});
  auto ep = run_episode(task, site, {}, SkillLibrary("mini_shop"), {}, *backend);
  EXPECT_EQ(ep.steps.size(), 5u);
  EXPECT_EQ(count_steps(ep), 0u);
  EXPECT_EQ(ep.terminated_by, TerminatedBy::max_steps);
  EXPECT_FALSE(ep.diagnostic.empty());
}

TEST(RunEpisode, EnvironmentErrorsAreRecordedNotFatal) {
  auto site = testing::load_site("mini_shop");
  websim::Task task{"t", "mini_shop", "q", {}, 5};
  auto backend = testing::scripted_policy({"click('nope')", "fill('102', 'x')", "send_msg_to_user('x')"});
  auto ep = run_episode(task, site, {}, SkillLibrary("mini_shop"), {}, *backend);
  ASSERT_EQ(ep.steps.size(), 3u);
  EXPECT_EQ(ep.steps[0].outcome.error->kind, dsl::StepErrorKind::unknown_element);
  EXPECT_EQ(ep.steps[1].outcome.error->kind, dsl::StepErrorKind::invalid_argument);
  EXPECT_EQ(ep.steps[0].before, ep.steps[0].after);
  EXPECT_EQ(count_steps(ep), 1u);
  EXPECT_EQ(consumed_steps(ep), 3u);
}

TEST(RunEpisode, PrefixErrorStopsEpisode) {
  auto site = testing::load_site("mini_shop");
  auto backend = testing::scripted_policy({"send_msg_to_user('x')"});
  websim::Task task{"t", "mini_shop", "q", {}, std::nullopt};
  std::vector<dsl::Action> prefix = {{"click", {"1553"}}};
  auto ep = run_episode(task, site, {}, SkillLibrary("mini_shop"), {}, *backend, prefix);
  EXPECT_EQ(ep.terminated_by, TerminatedBy::prefix_error);
  EXPECT_NE(ep.diagnostic.find("click('1553')"), std::string::npos);
  EXPECT_EQ(backend->requests().size(), 0u);
}

TEST(RunEpisode, UnresolvedPrefixIsRejected) {
  auto site = testing::load_site("mini_shop");
  auto backend = testing::scripted_policy({});
  websim::Task task{"t", "mini_shop", "q", {}, std::nullopt};
  std::vector<dsl::Action> prefix = {{"search_product", {"mug"}}};
  EXPECT_THROW(run_episode(task, site, {}, SkillLibrary("mini_shop"), {}, *backend, prefix), UnresolvedPrefix);
}

TEST(RunEpisode, PrefixCountsTowardBudget) {
  auto site = testing::load_site("mini_admin");
  auto lib = admin_library();
  websim::Task task{"t", "mini_admin", "q", {}, 3};
  auto backend = testing::scripted_policy({"noop()", "noop()", "noop()"});
  std::vector<dsl::Action> prefix = {{"open_marketing_reviews", {}}, {"search_reviews", {"757", "1239", "x"}}};
  auto ep = run_episode(task, site, {}, lib, {}, *backend, prefix);
  EXPECT_EQ(ep.steps.size(), 3u);
  EXPECT_EQ(ep.steps.size() - ep.prefix_length, 1u);
  EXPECT_EQ(ep.terminated_by, TerminatedBy::max_steps);
}

TEST(Modes, MemoryModesNeverListSkillsAsCallable) {
  auto site = testing::load_site("mini_admin");
  auto lib = admin_library();
  Memory mem = add_to_memory({}, render_program_skill(*lib.find("search_reviews")));
  websim::Task task{"t", "mini_admin", "q", {}, 2};
  for (Mode m : {Mode::vanilla, Mode::memory_text, Mode::memory_program, Mode::asi}) {
    auto backend = testing::scripted_policy({"open_marketing_reviews()", "noop()", "noop()"});
    AgentConfig cfg;
    cfg.mode = m;
    auto ep = run_episode(task, site, cfg, lib, mem, *backend);
    auto prompt = backend->requests().at(0).prompt;
    bool listed = prompt.find("- open_marketing_reviews()") != std::string::npos;
    EXPECT_EQ(listed, m == Mode::asi) << to_string(m);
    EXPECT_NE(prompt.find(std::string(kReferenceBanner)), std::string::npos);
    if (m == Mode::asi) {
      EXPECT_FALSE(ep.steps[0].is_error());
    } else {
      EXPECT_EQ(ep.steps[0].outcome.error->kind, dsl::StepErrorKind::parse_failure);
    }
  }
}

TEST(CountSteps, Definition) {
  EXPECT_EQ(count_steps(Episode{}), 0u);
  Episode ep;
  for (int i = 0; i < 5; ++i) {
    EpisodeStep s;
    if (i % 2 == 0 && i < 4) {
      s.outcome = dsl::StepOutcome::failure(dsl::StepErrorKind::parse_failure, "x");
    } else {
      s.action = dsl::Action{"noop", {}};
    }
    ep.steps.push_back(s);
  }
  EXPECT_EQ(count_steps(ep), 3u);
}

TEST(CountSteps, SubstitutionWithSkillsLowersCount) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, 30)(rng);
    Episode original;
    for (std::size_t i = 0; i < n; ++i) {
      EpisodeStep s;
      s.action = dsl::Action{"click", {std::to_string(i)}};
      original.steps.push_back(s);
    }
    // Replace k>0 disjoint windows of 2..5 primitives with one skill call each.
    Episode rewritten;
    std::size_t i = 0, k = 0;
    while (i < n) {
      std::size_t len = std::min(std::uniform_int_distribution<std::size_t>(2, 5)(rng), n - i);
      bool substitute = len >= 2 && (k == 0 || rng() % 2 == 0);
      EpisodeStep s;
      if (substitute) {
        s.action = dsl::Action{"skill_" + std::to_string(k++), {}};
        s.skill_call = true;
        i += len;
      } else {
        s.action = original.steps[i++].action;
      }
      rewritten.steps.push_back(s);
    }
    ASSERT_GT(k, 0u);
    EXPECT_LT(count_steps(rewritten), count_steps(original));
  }
}

TEST(Memory, AddAndDeduplicate) {
  Memory m;
  auto text = render_text_skill(reference_skill("search_product"));
  m = add_to_memory(m, text);
  EXPECT_EQ(m.size(), 1u);
  m = add_to_memory(m, text);
  EXPECT_EQ(m.size(), 1u);
  EXPECT_THROW(add_to_memory(m, ""), Error);
}

TEST(Memory, Renderings) {
  auto skill = reference_skill("search_reviews");
  auto prog = render_program_skill(skill);
  EXPECT_TRUE(prog.starts_with(std::string(kReferenceBanner) + "\ndef search_reviews("));
  auto text = render_text_skill(skill);
  EXPECT_TRUE(text.starts_with("## Search reviews\n"));
  EXPECT_NE(text.find("- fill({search_box_id}, {search_term})"), std::string::npos) << text;
  EXPECT_EQ(text.find("def "), std::string::npos);
  auto sp = render_text_skill(reference_skill("search_product"));
  EXPECT_NE(sp.find("- if has_popup_window():\n  - click('Close')"), std::string::npos) << sp;
}

TEST(Library, CommitsOnlyCalledSkills) {
  SkillLibrary lib("mini_admin");
  auto a = reference_skill("open_marketing_reviews");
  auto b = reference_skill("search_reviews");
  auto both = commit_skills(lib, {a, b}, {"open_marketing_reviews", "search_reviews"});
  EXPECT_EQ(both.size(), 2u);
  EXPECT_EQ(both.find("search_reviews")->status, dsl::SkillStatus::verified);
  EXPECT_EQ(both.find("search_reviews")->ns, "mini_admin");
  auto one = commit_skills(lib, {a, b}, {"search_reviews"});
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.find("open_marketing_reviews"), nullptr);
  EXPECT_EQ(lib.size(), 0u);
}

TEST(Library, CycleThroughImportedSkillIsRejected) {
  SkillLibrary lib("mini_shop_v2", "mini_shop");
  auto outer = dsl::parse_single_skill("def outer(x):\n    inner(x)\n    click('2')\n");
  outer.imported_from = "mini_shop";
  auto inner_old = dsl::parse_single_skill("def inner(x):\n    fill('1', x)\n    click('3')\n");
  inner_old.imported_from = "mini_shop";
  lib.insert(outer);
  lib.insert(inner_old);
  auto inner_new = dsl::parse_single_skill("def inner(x):\n    outer(x)\n    click('3')\n");
  EXPECT_THROW(commit_skills(lib, {inner_new}, {"inner"}, true), CycleIntroduced);
  EXPECT_EQ(lib.find("inner")->source, inner_old.source);
  EXPECT_TRUE(lib.deprecated().empty());
}

TEST(Library, CollisionsAndUpdates) {
  SkillLibrary lib("mini_shop_v2", "mini_shop");
  auto old = dsl::parse_single_skill("def sort_by_listings(c):\n    click(c)\n    select_option('1553', 'Price')\n");
  old.imported_from = "mini_shop";
  old.status = dsl::SkillStatus::verified;
  lib.insert(old);
  auto fresh = dsl::parse_single_skill(
      "def sort_by_listings(c):\n    click(c)\n    select_option('1560', 'Price: Low to High')\n");
  EXPECT_THROW(commit_skills(lib, {fresh}, {"sort_by_listings"}, false), SkillCollision);
  auto updated = commit_skills(lib, {fresh}, {"sort_by_listings"}, true);
  EXPECT_EQ(updated.find("sort_by_listings")->source, fresh.source);
  ASSERT_EQ(updated.deprecated().size(), 1u);
  EXPECT_EQ(updated.deprecated()[0].status, dsl::SkillStatus::deprecated);
  // A skill verified on this site is never shadowed, even with updates allowed.
  auto again = dsl::parse_single_skill("def sort_by_listings(c):\n    click(c)\n    click('9')\n");
  EXPECT_THROW(commit_skills(updated, {again}, {"sort_by_listings"}, true), SkillCollision);
}

TEST(Library, CallableIsSortedAndMonotone) {
  SkillLibrary lib("s");
  auto z = dsl::parse_single_skill("def zed(x):\n    click(x)\n    click('1')\n");
  auto a = dsl::parse_single_skill("def abc(x):\n    click(x)\n    click('2')\n");
  lib = commit_skills(lib, {z}, {"zed"});
  auto lib2 = commit_skills(lib, {a}, {"abc"});
  ASSERT_EQ(lib2.callable().size(), 2u);
  EXPECT_EQ(lib2.callable()[0]->name, "abc");
  EXPECT_NE(lib2.find("zed"), nullptr);
  EXPECT_EQ(lib2.find("zed")->created_at, "1");
  EXPECT_EQ(lib2.find("abc")->created_at, "2");
}

TEST(EpisodeLog, StepRecordFields) {
  auto site = testing::load_site("mini_admin");
  auto lib = admin_library();
  auto backend = testing::scripted_policy({"send_msg_to_user('2')"});
  std::vector<dsl::Action> prefix = {{"open_marketing_reviews", {}}};
  auto ep = run_episode({"t", "mini_admin", "q", {}, std::nullopt}, site, {}, lib, {}, *backend, prefix);
  auto j = episode_to_json(ep);
  EXPECT_EQ(j["terminated_by"], "message");
  EXPECT_EQ(j["steps"][0]["action"], "open_marketing_reviews()");
  EXPECT_EQ(j["steps"][0]["trace"].size(), 2u);
  EXPECT_EQ(j["steps"][1]["outcome"], "ok");
  EXPECT_EQ(j["steps"][0]["fingerprint_after"].get<std::string>().size(), 16u);
  EXPECT_EQ(j["count_steps"], 2);
}

}  // namespace
}  // namespace webskill::agent
