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

#include <gtest/gtest.h>

#include "support/fig3.hpp"
#include "support/fixtures.hpp"
#include "support/scripted.hpp"
#include "webskill/dsl/parser.hpp"
#include "webskill/verification/checkpoint.hpp"
#include "webskill/verification/judge.hpp"
#include "webskill/verification/verifier.hpp"

namespace webskill::verification {
namespace {

using llm::PromptRole;

const websim::Task& task_by_id(const std::vector<websim::Task>& tasks, const std::string& id) {
  for (const auto& t : tasks) {
    if (t.task_id == id) return t;
  }
  throw std::runtime_error(id);
}

agent::Episode run_policy(const std::string& site_id, const websim::Task& task, const std::vector<std::string>& policy) {
  auto backend = testing::scripted_policy(policy);
  return agent::run_episode(task, testing::load_site(site_id), {}, agent::SkillLibrary(site_id), {}, *backend);
}

TEST(Checkpoints, AddressTaskScoresHalfThenWhole) {
  auto site = testing::load_site("mini_shop");
  auto tasks = testing::load_site_tasks("mini_shop");
  const auto& task = task_by_id(tasks, "shop-04");
  ASSERT_EQ(task.checkpoints.size(), 2u);
  auto half = run_policy("mini_shop", task,
                         {"click('110')", "fill('401', '42 Elm Street, Springfield')", "click('402')",
                          "send_msg_to_user('done')"});
  EXPECT_DOUBLE_EQ(checkpoint_score(half, *site, task.checkpoints), 0.5);
  auto whole = run_policy("mini_shop", task,
                          {"click('110')", "fill('401', '42 Elm Street, Springfield')", "click('402')",
                           "fill('403', '42 Elm Street, Springfield')", "click('404')", "send_msg_to_user('done')"});
  EXPECT_DOUBLE_EQ(checkpoint_score(whole, *site, task.checkpoints), 1.0);
  auto none = run_policy("mini_shop", task, {"send_msg_to_user('done')"});
  EXPECT_DOUBLE_EQ(checkpoint_score(none, *site, task.checkpoints), 0.0);
}

agent::Episode with_flags(std::map<std::string, websim::FlagValue> flags) {
  agent::Episode ep;
  ep.final_state.flags = std::move(flags);
  return ep;
}

websim::CheckpointSpec flag_eq(std::string name, std::string value, double weight = 1) {
  websim::CheckpointSpec c;
  c.id = name;
  c.kind = websim::CheckpointKind::flag_equals;
  c.name = std::move(name);
  c.value = std::move(value);
  c.weight = weight;
  return c;
}

TEST(Checkpoints, FractionsAndWeights) {
  auto site = testing::load_site("mini_shop");
  auto ep = with_flags({{"a", "1"}, {"b", "1"}, {"c", "1"}});
  std::vector<websim::CheckpointSpec> five = {flag_eq("a", "1"), flag_eq("b", "1"), flag_eq("c", "1"),
                                              flag_eq("d", "1"), flag_eq("e", "1")};
  EXPECT_DOUBLE_EQ(checkpoint_score(ep, *site, five), 0.6);
  std::vector<websim::CheckpointSpec> all3(five.begin(), five.begin() + 3);
  EXPECT_DOUBLE_EQ(checkpoint_score(ep, *site, all3), 1.0);
  EXPECT_DOUBLE_EQ(checkpoint_score(ep, *site, {flag_eq("a", "1", 3), flag_eq("z", "1", 1)}), 0.75);
  EXPECT_THROW(checkpoint_score(ep, *site, {}), Error);
}

TEST(Checkpoints, EachKind) {
  auto site = testing::load_site("mini_shop");
  agent::Episode ep;
  ep.final_state.message_log = {"The price is $12.99", "Done"};
  ep.final_state.url_log = {"/", "/search"};
  ep.final_state.flags["cart"] = std::vector<std::string>{"p-mug", "p-coffee"};
  ep.final_state.overrides["401"] = "1 Main";
  websim::CheckpointSpec c;
  c.kind = websim::CheckpointKind::message_contains;
  c.substrings = {"PRICE", "12.99"};
  EXPECT_TRUE(checkpoint_passes(c, ep, *site));
  c.substrings = {"12.99", "absent"};
  EXPECT_FALSE(checkpoint_passes(c, ep, *site));
  c.require_all = false;
  EXPECT_TRUE(checkpoint_passes(c, ep, *site));
  c = {};
  c.kind = websim::CheckpointKind::url_visited;
  c.url = "/search";
  EXPECT_TRUE(checkpoint_passes(c, ep, *site));
  c.url = "/cart";
  EXPECT_FALSE(checkpoint_passes(c, ep, *site));
  c = {};
  c.kind = websim::CheckpointKind::flag_list_contains;
  c.name = "cart";
  c.value = "p-coffee";
  EXPECT_TRUE(checkpoint_passes(c, ep, *site));
  c.value = "p-pens";
  EXPECT_FALSE(checkpoint_passes(c, ep, *site));
  c = {};
  c.kind = websim::CheckpointKind::element_value_equals;
  c.page = "/account/address";
  c.bid = "401";
  c.value = "1 Main";
  EXPECT_TRUE(checkpoint_passes(c, ep, *site));
  c.bid = "nope";
  EXPECT_FALSE(checkpoint_passes(c, ep, *site));
}

// Independent evaluation over the raw logs, written without the library helpers.
bool oracle_passes(const websim::CheckpointSpec& c, const websim::EnvState& s) {
  auto lower = [](std::string x) {
    for (auto& ch : x) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return x;
  };
  switch (c.kind) {
    case websim::CheckpointKind::message_contains: {
      std::size_t hits = 0;
      for (const auto& sub : c.substrings) {
        bool found = false;
        for (const auto& m : s.message_log) found = found || lower(m).find(lower(sub)) != std::string::npos;
        hits += found;
      }
      return c.require_all ? hits == c.substrings.size() && hits > 0 : hits > 0;
    }
    case websim::CheckpointKind::url_visited: {
      for (const auto& u : s.url_log) {
        if (u == c.url) return true;
      }
      return false;
    }
    case websim::CheckpointKind::flag_equals: {
      auto it = s.flags.find(c.name);
      return it != s.flags.end() && std::holds_alternative<std::string>(it->second) &&
             std::get<std::string>(it->second) == c.value;
    }
    case websim::CheckpointKind::flag_list_contains: {
      auto it = s.flags.find(c.name);
      if (it == s.flags.end()) return false;
      if (auto* v = std::get_if<std::string>(&it->second)) return *v == c.value;
      for (const auto& x : std::get<std::vector<std::string>>(it->second)) {
        if (x == c.value) return true;
      }
      return false;
    }
    default:
      return false;
  }
}

TEST(Checkpoints, MatchesBruteForceOracle) {
  auto site = testing::load_site("mini_shop");
  std::mt19937 rng(99);
  const std::vector<std::string> words = {"alpha", "Beta", "gamma", "12.99", "DELTA"};
  auto pick = [&](const std::vector<std::string>& xs) { return xs[rng() % xs.size()]; };
  for (int trial = 0; trial < 500; ++trial) {
    agent::Episode ep;
    auto& s = ep.final_state;
    for (int i = 0, n = static_cast<int>(rng() % 3); i < n; ++i) s.message_log.push_back(pick(words) + " " + pick(words));
    for (int i = 0, n = static_cast<int>(rng() % 4); i < n; ++i) s.url_log.push_back("/" + pick(words));
    if (rng() % 2) s.flags["f"] = pick(words);
    if (rng() % 2) s.flags["l"] = std::vector<std::string>{pick(words), pick(words)};
    std::vector<websim::CheckpointSpec> specs;
    double total = 0, passed = 0;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 5); i < n; ++i) {
      websim::CheckpointSpec c;
      c.kind = static_cast<websim::CheckpointKind>(rng() % 5);
      if (c.kind == websim::CheckpointKind::element_value_equals) c.kind = websim::CheckpointKind::url_visited;
      c.substrings = {pick(words)};
      if (rng() % 2) c.substrings.push_back(pick(words));
      c.require_all = rng() % 2;
      c.url = "/" + pick(words);
      c.name = rng() % 2 ? "f" : "l";
      c.value = pick(words);
      c.weight = 1 + static_cast<double>(rng() % 3);
      total += c.weight;
      if (oracle_passes(c, s)) passed += c.weight;
      EXPECT_EQ(checkpoint_passes(c, ep, *site), oracle_passes(c, s));
      specs.push_back(c);
    }
    EXPECT_DOUBLE_EQ(checkpoint_score(ep, *site, specs), passed / total);
  }
}

TEST(Judge, LmAndCheckpointPaths) {
  auto site = testing::load_site("mini_shop");
  auto tasks = testing::load_site_tasks("mini_shop");
  const auto& task = task_by_id(tasks, "shop-01");
  auto ep = run_policy("mini_shop", task,
                       {"fill('101', 'mug')", "click('102')", "click('p-mug')", "send_msg_to_user('12.99')"});
  auto judge = testing::scripted({{PromptRole::judge, "Thoughts: The price was reported.\nStatus: \"success\""},
                                  {PromptRole::judge, "I cannot tell."}});
  auto lm = judge_episode(ep, task, *site, JudgeKind::lm, *judge);
  EXPECT_TRUE(lm.success);
  EXPECT_EQ(lm.source, "lm");
  EXPECT_NE(judge->requests()[0].prompt.find("Bot response to the user: 12.99"), std::string::npos);
  auto unparseable = judge_episode(ep, task, *site, JudgeKind::lm, *judge);
  EXPECT_FALSE(unparseable.success);

  auto cp = judge_episode(ep, task, *site, JudgeKind::automatic, *judge);
  EXPECT_TRUE(cp.success);
  EXPECT_EQ(cp.source, "checkpoints");
  EXPECT_EQ(*cp.score, 1.0);
  EXPECT_EQ(judge->requests().size(), 2u);
}

TEST(Judge, EmptyEpisodeFailsWithoutRequest) {
  auto site = testing::load_site("mini_shop");
  auto judge = testing::scripted({{PromptRole::judge, "Status: success"}});
  websim::Task task{"t", "mini_shop", "q", {}, std::nullopt};
  auto v = judge_episode(agent::Episode{}, task, *site, JudgeKind::lm, *judge);
  EXPECT_FALSE(v.success);
  EXPECT_TRUE(judge->requests().empty());
}

induction::InductionCandidate fig3_candidate() {
  auto tasks = testing::load_site_tasks("mini_admin");
  auto backend = testing::scripted_policy(testing::fig3_policy_responses());
  auto ep = agent::run_episode(tasks.at(0), testing::load_site("mini_admin"), {}, agent::SkillLibrary("mini_admin"), {},
                               *backend);
  std::vector<llm::ReplayEntry> entries;
  auto replies = testing::fig3_cleaner_replies();
  for (std::size_t i = 0; i < replies.size(); ++i) entries.push_back({PromptRole::cleaner, static_cast<int>(i), replies[i]});
  entries.push_back({PromptRole::inducer, 0, testing::fig3_inducer_output()});
  llm::ScriptedBackend ib(entries);
  return induction::induce(induction::clean_episode(ep, ib), agent::SkillLibrary("mini_admin"), ib);
}

TEST(Verify, FigureThreeCandidatePasses) {
  auto cand = fig3_candidate();
  ASSERT_FALSE(cand.is_void());
  auto tasks = testing::load_site_tasks("mini_admin");
  auto policy = testing::scripted_policy({"The grid shows two matches.\n```\nsend_msg_to_user('2')\n```"});
  agent::SkillLibrary lib("mini_admin");
  agent::Episode ep;
  auto report = verify_candidate(tasks.at(0), testing::load_site("mini_admin"), cand, {}, lib, *policy,
                                 JudgeKind::automatic, &ep);
  EXPECT_TRUE(report.correctness);
  EXPECT_TRUE(report.skill_usage);
  EXPECT_TRUE(report.skill_validity);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.full_trajectory,
            (std::vector<std::string>{"open_marketing_reviews()", "search_reviews('757', '1239', 'satisfied')",
                                      "send_msg_to_user('2')"}));
  EXPECT_EQ(report.prefix_length, 2u);
  EXPECT_EQ(report.continuation_length, 1u);
  ASSERT_EQ(report.skill_calls.size(), 2u);
  for (const auto& c : report.skill_calls) EXPECT_TRUE(c.changed());
  // The verification run saw the candidate skills as callable.
  EXPECT_NE(policy->requests()[0].prompt.find("- search_reviews("), std::string::npos);

  auto gate = gate_and_commit(report, cand, lib);
  EXPECT_EQ(gate.library.size(), 2u);
  EXPECT_EQ(gate.committed.size(), 2u);
  EXPECT_EQ(gate.library.find("open_marketing_reviews")->status, dsl::SkillStatus::verified);
  EXPECT_EQ(lib.size(), 0u);
}

induction::InductionCandidate make_candidate(std::vector<std::string> sources, std::vector<std::string> prefix) {
  induction::InductionCandidate c;
  c.episode_id = c.task_id = "shop-01";
  c.query = "q";
  for (const auto& s : sources) c.skills.push_back(dsl::parse_single_skill(s));
  for (const auto& p : prefix) c.prefix.push_back(dsl::parse_call_expression(p));
  c.rewritten = c.prefix;
  return c;
}

const char* kSearch = "def search_product(name):\n    fill('101', name)\n    click('102')\n";
const char* kIdle = "def idle():\n    noop()\n    noop()\n";

TEST(Verify, DoubleNoopWrapperIsInvalid) {
  auto tasks = testing::load_site_tasks("mini_shop");
  auto cand = make_candidate({kSearch, kIdle}, {"search_product('mug')", "idle()"});
  auto policy = testing::scripted_policy({"click('p-mug')", "send_msg_to_user('12.99')"});
  auto r = verify_candidate(task_by_id(tasks, "shop-01"), testing::load_site("mini_shop"), cand, {},
                            agent::SkillLibrary("mini_shop"), *policy);
  EXPECT_TRUE(r.correctness);
  EXPECT_TRUE(r.skill_usage);
  EXPECT_FALSE(r.skill_validity);
  EXPECT_FALSE(r.passed);
  auto gate = gate_and_commit(r, cand, agent::SkillLibrary("mini_shop"));
  EXPECT_TRUE(gate.library.empty());
  EXPECT_TRUE(gate.diagnostic.has_value());
}

TEST(Verify, StalePrefixFailsClosed) {
  auto tasks = testing::load_site_tasks("mini_shop");
  auto cand = make_candidate({"def sort_it(c):\n    click(c)\n    select_option('1560', 'Price')\n"}, {"sort_it('120')"});
  auto policy = testing::scripted({{PromptRole::policy, "send_msg_to_user('x')"}, {PromptRole::judge, "Status: success"}});
  auto r = verify_candidate(task_by_id(tasks, "shop-07"), testing::load_site("mini_shop"), cand, {},
                            agent::SkillLibrary("mini_shop"), *policy, JudgeKind::lm);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.correctness);
  EXPECT_FALSE(r.skill_validity);
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_NE(r.diagnostics[0].find("prefix failed"), std::string::npos);
  EXPECT_TRUE(policy->requests().empty());
}

TEST(Verify, VoidCandidateFails) {
  induction::InductionCandidate c;
  c.void_reason = "inducer produced no functions";
  auto policy = testing::scripted_policy({});
  auto tasks = testing::load_site_tasks("mini_shop");
  auto r = verify_candidate(tasks.at(0), testing::load_site("mini_shop"), c, {}, agent::SkillLibrary(), *policy);
  EXPECT_FALSE(r.passed);
}

TEST(Verify, ContinuationRespectsRemainingBudget) {
  auto tasks = testing::load_site_tasks("mini_shop");
  auto task = task_by_id(tasks, "shop-01");
  task.max_steps = 3;
  auto cand = make_candidate({kSearch}, {"search_product('mug')"});
  auto policy = testing::scripted_policy({"noop()", "noop()", "noop()", "noop()"});
  agent::Episode ep;
  auto r = verify_candidate(task, testing::load_site("mini_shop"), cand, {}, agent::SkillLibrary("mini_shop"), *policy,
                            JudgeKind::automatic, &ep);
  EXPECT_EQ(r.continuation_length, 2u);
  EXPECT_LE(r.continuation_length, 3u - r.prefix_length);
  EXPECT_EQ(policy->remaining(PromptRole::policy), 2u);
  EXPECT_FALSE(r.correctness);
}

TEST(Gate, CommitsOnlyCalledSkillsAndTheirCandidateCallees) {
  auto tasks = testing::load_site_tasks("mini_shop");
  auto cand = make_candidate({kSearch, "def open_mug(name):\n    search_product(name)\n    click('p-mug')\n",
                              "def unused(x):\n    click(x)\n    click('111')\n"},
                             {"open_mug('mug')"});
  auto policy = testing::scripted_policy({"send_msg_to_user('12.99')"});
  auto r = verify_candidate(task_by_id(tasks, "shop-01"), testing::load_site("mini_shop"), cand, {},
                            agent::SkillLibrary("mini_shop"), *policy);
  ASSERT_TRUE(r.passed);
  EXPECT_EQ(r.called_candidates, (std::set<std::string>{"open_mug", "search_product"}));
  auto gate = gate_and_commit(r, cand, agent::SkillLibrary("mini_shop"));
  EXPECT_EQ(gate.library.size(), 2u);
  EXPECT_EQ(gate.library.find("unused"), nullptr);
}

TEST(Gate, ReportFlagsAloneNeverCommit) {
  auto cand = make_candidate({kSearch}, {"search_product('mug')"});
  for (int mask = 0; mask < 8; ++mask) {
    VerificationReport r;
    r.correctness = mask & 1;
    r.skill_usage = mask & 2;
    r.skill_validity = mask & 4;
    r.called_candidates = {"search_product"};
    finalize(r);
    auto gate = gate_and_commit(r, cand, agent::SkillLibrary("s"));
    EXPECT_EQ(gate.library.size(), mask == 7 ? 1u : 0u) << mask;
    // A report claiming to pass with a failed check is still rejected.
    r.passed = true;
    EXPECT_EQ(gate_and_commit(r, cand, agent::SkillLibrary("s")).library.size(), mask == 7 ? 1u : 0u);
  }
}

}  // namespace
}  // namespace webskill::verification
