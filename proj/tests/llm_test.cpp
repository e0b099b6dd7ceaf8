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

#include <atomic>
#include <cstdlib>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>
#include <json.hpp>

#include "support/fig3.hpp"
#include "support/fixtures.hpp"
#include "webskill/dsl/parser.hpp"
#include "webskill/dsl/primitives.hpp"
#include "webskill/llm/backend.hpp"
#include "webskill/llm/parsers.hpp"
#include "webskill/llm/prompts.hpp"

namespace webskill::llm {
namespace {

bool primitives_only(std::string_view name) { return dsl::find_primitive(name).has_value(); }

TEST(Scripted, ServesEntriesInOrderPerRole) {
  auto backend = ScriptedBackend::parse(
      "{\"schema\":\"webskill.replay\",\"version\":1}\n"
      "{\"role\":\"judge\",\"index\":0,\"response\":\"Status: success\"}\n"
      "{\"role\":\"judge\",\"index\":1,\"response\":\"Status: failure\"}\n"
      "{\"role\":\"policy\",\"index\":0,\"response\":\"noop()\"}\n");
  EXPECT_EQ(backend->complete({PromptRole::judge, "a", {}}).text, "Status: success");
  EXPECT_EQ(backend->complete({PromptRole::policy, "b", {}}).text, "noop()");
  EXPECT_EQ(backend->complete({PromptRole::judge, "c", {}}).text, "Status: failure");
  EXPECT_THROW(backend->complete({PromptRole::judge, "d", {}}), ReplayExhausted);
  EXPECT_THROW(backend->complete({PromptRole::cleaner, "e", {}}), ReplayExhausted);
  EXPECT_EQ(backend->requests().size(), 5u);
  EXPECT_EQ(backend->requests()[1].prompt, "b");
  EXPECT_EQ(backend->remaining(PromptRole::judge), 0u);
}

TEST(Scripted, RejectsDuplicatesAndMissingHeader) {
  EXPECT_THROW(ScriptedBackend::parse("{\"role\":\"judge\",\"index\":0,\"response\":\"x\"}\n"), Error);
  EXPECT_THROW(ScriptedBackend::parse("{\"schema\":\"webskill.replay\",\"version\":1}\n"
                                      "{\"role\":\"judge\",\"index\":0,\"response\":\"x\"}\n"
                                      "{\"role\":\"judge\",\"index\":0,\"response\":\"y\"}\n"),
               Error);
  EXPECT_THROW(ScriptedBackend::parse("{\"schema\":\"webskill.replay\",\"version\":1}\n"
                                      "{\"role\":\"oracle\",\"index\":0,\"response\":\"y\"}\n"),
               Error);
}

TEST(Scripted, ConcurrentRequestsConsumeEachEntryOnce) {
  std::vector<ReplayEntry> entries;
  for (int i = 0; i < 200; ++i) entries.push_back({PromptRole::policy, i, std::to_string(i)});
  ScriptedBackend backend(entries);
  std::vector<std::thread> threads;
  std::vector<std::vector<int>> seen(4);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 50; ++i) seen[t].push_back(std::stoi(backend.complete({PromptRole::policy, "p", {}}).text));
    });
  }
  for (auto& th : threads) th.join();
  std::vector<int> all;
  for (auto& s : seen) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  for (int i = 0; i < 200; ++i) EXPECT_EQ(all[static_cast<std::size_t>(i)], i);
}

class StubServer {
 public:
  StubServer() {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits_;
      last_body_ = req.body;
      auth_ = req.get_header_value("Authorization");
      if (hits_ <= fail_first_) {
        res.status = 503;
        return;
      }
      auto body = nlohmann::json::parse(req.body);
      std::string echo = "echo: " + body["messages"][0]["content"].get<std::string>();
      res.set_content(nlohmann::json{{"choices", {{{"message", {{"role", "assistant"}, {"content", echo}}}}}}}.dump(),
                      "application/json");
    });
    server_.Post("/bad", [](const httplib::Request&, httplib::Response& res) { res.status = 400; });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~StubServer() {
    server_.stop();
    thread_.join();
  }
  std::string url(const std::string& path) const { return "http://127.0.0.1:" + std::to_string(port_) + path; }

  std::atomic<int> hits_{0};
  int fail_first_ = 0;
  std::string last_body_;
  std::string auth_;

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

TEST(Http, EchoStubRoundTrip) {
  unsetenv("NO_NETWORK");
  setenv("WEBSKILL_TEST_KEY", "sk-test", 1);
  StubServer stub;
  HttpConfig cfg;
  cfg.url = stub.url("/v1/chat/completions");
  cfg.model = "stub-model";
  cfg.api_key_env = "WEBSKILL_TEST_KEY";
  HttpBackend backend(cfg);
  auto res = backend.complete({PromptRole::judge, "hello", {0.0, 64}});
  EXPECT_EQ(res.text, "echo: hello");
  auto sent = nlohmann::json::parse(stub.last_body_);
  EXPECT_EQ(sent["model"], "stub-model");
  EXPECT_EQ(sent["max_tokens"], 64);
  EXPECT_EQ(stub.auth_, "Bearer sk-test");
}

TEST(Http, RetriesTransientFailures) {
  unsetenv("NO_NETWORK");
  StubServer stub;
  stub.fail_first_ = 2;
  HttpConfig cfg;
  cfg.url = stub.url("/v1/chat/completions");
  cfg.initial_backoff_ms = 1;
  HttpBackend backend(cfg);
  EXPECT_EQ(backend.complete({PromptRole::policy, "x", {}}).text, "echo: x");
  EXPECT_EQ(stub.hits_.load(), 3);
}

TEST(Http, ErrorsAfterAttemptsOrOnClientStatus) {
  unsetenv("NO_NETWORK");
  StubServer stub;
  stub.fail_first_ = 5;
  HttpConfig cfg;
  cfg.url = stub.url("/v1/chat/completions");
  cfg.initial_backoff_ms = 1;
  EXPECT_THROW(HttpBackend(cfg).complete({PromptRole::policy, "x", {}}), NonOkStatus);
  EXPECT_EQ(stub.hits_.load(), 3);
  cfg.url = stub.url("/bad");
  EXPECT_THROW(HttpBackend(cfg).complete({PromptRole::policy, "x", {}}), NonOkStatus);
  cfg.url = "http://127.0.0.1:1/v1/chat/completions";
  cfg.timeout_s = 1;
  EXPECT_THROW(HttpBackend(cfg).complete({PromptRole::policy, "x", {}}), TransportError);
}

TEST(Http, NoNetworkGuard) {
  setenv("NO_NETWORK", "1", 1);
  HttpConfig cfg;
  cfg.url = "http://127.0.0.1:9/v1/chat/completions";
  EXPECT_THROW(HttpBackend(cfg).complete({PromptRole::policy, "x", {}}), TransportError);
  unsetenv("NO_NETWORK");
}

TEST(Prompts, JudgeHasStrictnessSentence) {
  auto p = render_judge_prompt({"Count the reviews", {"click('488')"}, "RootWebArea 'Reviews'\n", "2"});
  EXPECT_NE(p.find("Please be strict about the evaluation process."), std::string::npos);
  EXPECT_NE(p.find("Status: \"success\" or \"failure\""), std::string::npos);
  EXPECT_NE(p.find("1. click('488')"), std::string::npos);
  EXPECT_NE(p.find("Bot response to the user: 2"), std::string::npos);
  EXPECT_THROW(render_judge_prompt({"", {}, "", std::nullopt}), MissingField);
}

TEST(Prompts, CleanerEmbedsExample) {
  auto p = render_cleaner_prompt("I will click the button.");
  EXPECT_NE(p.find("Clicked the SALES link to access the Orders section for customer order histories."),
            std::string::npos);
  EXPECT_NE(p.find("'''I will click the button.'''"), std::string::npos);
  EXPECT_THROW(render_cleaner_prompt(""), MissingField);
}

TEST(Prompts, InducerListsLibraryAndSteps) {
  auto skill = dsl::parse_single_skill(testing::read_file(testing::data_path("skills/reference/search_reviews.py")));
  auto p = render_inducer_prompt({"q", {{"Clicked Marketing.", "click('488')"}}, {&skill}});
  EXPECT_NE(p.find("Do not include any try-except blocks in the functions."), std::string::npos);
  EXPECT_NE(p.find("- search_reviews(search_box_id: str, search_button_id: str, search_term: str)"),
            std::string::npos);
  EXPECT_NE(p.find("# Clicked Marketing.\nclick('488')\n"), std::string::npos);
  EXPECT_THROW(render_inducer_prompt({"q", {}, {}}), MissingField);
}

std::size_t action_lines(const std::string& prompt) {
  auto start = prompt.find("# Action space");
  auto end = prompt.find("\n# ", start + 1);
  std::size_t n = 0;
  for (auto pos = prompt.find("\n- ", start); pos != std::string::npos && pos < end; pos = prompt.find("\n- ", pos + 1)) {
    ++n;
  }
  return n;
}

TEST(Prompts, EmptyPolicyListsFifteenPrimitives) {
  PolicyContext ctx;
  ctx.query = "find the mug";
  ctx.current_url = "/";
  ctx.current_observation = "RootWebArea 'Home'\n";
  auto p = render_policy_prompt(ctx);
  EXPECT_EQ(action_lines(p), 15u);
  EXPECT_EQ(p.find("# Memory"), std::string::npos);
}

TEST(Prompts, SkillsAreSortedAndDistinguishPrompts) {
  auto a = dsl::parse_single_skill("def zeta(x):\n    click(x)\n    click('2')\n");
  auto b = dsl::parse_single_skill("def alpha(x):\n    fill('1', x)\n    click('2')\n");
  PolicyContext ctx;
  ctx.query = "q";
  ctx.current_url = "/";
  ctx.skills = {&a, &b};
  auto p1 = render_policy_prompt(ctx);
  EXPECT_EQ(action_lines(p1), 17u);
  EXPECT_LT(p1.find("- alpha(x)"), p1.find("- zeta(x)"));
  ctx.skills = {&b, &a};
  EXPECT_EQ(render_policy_prompt(ctx), p1);
  ctx.skills = {&b};
  EXPECT_NE(render_policy_prompt(ctx), p1);
}

TEST(Prompts, OlderObservationsAreElided) {
  PolicyContext ctx;
  ctx.query = "q";
  ctx.current_url = "/now";
  ctx.current_observation = "OBS-NOW\n";
  for (int i = 0; i < 5; ++i) {
    ctx.history.push_back({"/p" + std::to_string(i), "OBS-" + std::to_string(i) + "\n", "t", "noop()", "no_effect"});
  }
  auto p = render_policy_prompt(ctx);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(p.find("OBS-" + std::to_string(i)), std::string::npos) << i;
  EXPECT_NE(p.find("OBS-3"), std::string::npos);
  EXPECT_NE(p.find("OBS-4"), std::string::npos);
  EXPECT_NE(p.find("OBS-NOW"), std::string::npos);
  EXPECT_NE(p.find("URL: /p0"), std::string::npos);
}

TEST(PolicyParser, FencedBlock) {
  auto a = parse_policy_action("I should open the sales page.\n```\nclick('183')\n```", primitives_only);
  EXPECT_EQ(a.action.to_string(), "click('183')");
  EXPECT_EQ(a.thought, "I should open the sales page.");
}

TEST(PolicyParser, BareMessage) {
  auto a = parse_policy_action("send_msg_to_user('2')", primitives_only);
  EXPECT_EQ(a.action.name, "send_msg_to_user");
  EXPECT_EQ(a.action.args, dsl::ValueList{"2"});
  EXPECT_TRUE(a.thought.empty());
}

TEST(PolicyParser, Failures) {
  try {
    parse_policy_action("I am not sure what to do next.", primitives_only);
    FAIL();
  } catch (const PolicyParseError& e) {
    EXPECT_EQ(e.kind(), PolicyParseErrorKind::no_action_found);
  }
  try {
    parse_policy_action("Use the skill.\n```\nsearch_reviews('757', '1239', 'x')\n```", primitives_only);
    FAIL();
  } catch (const PolicyParseError& e) {
    EXPECT_EQ(e.kind(), PolicyParseErrorKind::unknown_action_name);
    EXPECT_EQ(e.thought(), "Use the skill.");
  }
  try {
    parse_policy_action("```\nclick(bid)\n```", primitives_only);
    FAIL();
  } catch (const PolicyParseError& e) {
    EXPECT_EQ(e.kind(), PolicyParseErrorKind::argument_parse_error);
  }
}

TEST(PolicyParser, LastCallWinsAndCommentsIgnored) {
  auto a = parse_policy_action("Plan:\n```python\n# search first\nfill('101', 'mug')  # the box\nclick('102')\n```\n",
                               primitives_only);
  EXPECT_EQ(a.action.to_string(), "click('102')");
  auto b = parse_policy_action("Thinking...\nclick('1')\nthen\nfill('2', 'a # b')", primitives_only);
  EXPECT_EQ(b.action.to_string(), "fill('2', 'a # b')");
  EXPECT_EQ(b.thought, "Thinking...\nclick('1')\nthen");
}

TEST(JudgeParser, Verdicts) {
  auto v = parse_judge_verdict("Thoughts: The agent found 2 reviews.\n\nStatus: \"success\"");
  EXPECT_TRUE(v.success);
  EXPECT_EQ(v.thoughts, "The agent found 2 reviews.");
  EXPECT_FALSE(parse_judge_verdict("Status: failure").success);
  EXPECT_FALSE(parse_judge_verdict("status: success\nStatus: FAILURE").success);
  EXPECT_THROW(parse_judge_verdict("the task went well"), UnparseableVerdict);
  EXPECT_THROW(parse_judge_verdict("Status: maybe"), UnparseableVerdict);
}

std::string fig3_output() { return testing::fig3_inducer_output(); }

TEST(InducerParser, FigureStyleOutput) {
  auto out = parse_inducer_output(fig3_output());
  ASSERT_EQ(out.functions.size(), 2u);
  EXPECT_TRUE(out.functions[0].starts_with("def open_marketing_reviews():"));
  EXPECT_TRUE(out.functions[1].starts_with("def search_reviews("));
  ASSERT_EQ(out.rewritten.size(), 1u);
  EXPECT_EQ(out.rewritten[0].instruction, "Instruction: Count the reviews that mention the term 'satisfied'.");
  EXPECT_EQ(out.rewritten[0].code,
            "open_marketing_reviews()\nsearch_reviews('757', '1239', 'satisfied')\nsend_msg_to_user('2')\n");
}

TEST(InducerParser, NoFencesYieldsNothing) {
  auto out = parse_inducer_output("No reusable functions apply here.");
  EXPECT_TRUE(out.functions.empty());
  EXPECT_TRUE(out.rewritten.empty());
}

TEST(InducerParser, PositionalPairs) {
  auto out = parse_inducer_output(
      "```python\ndef a(x):\n    click(x)\n    click('1')\n```\n"
      "```python\ndef b(y):\n    fill('2', y)\n    click('3')\n```\n"
      "Example 1:\n```\na('5')\n```\nExample 2:\n```\nb('t')\nnoop()\n```\n");
  ASSERT_EQ(out.functions.size(), 2u);
  ASSERT_EQ(out.rewritten.size(), 2u);
  EXPECT_EQ(out.rewritten[0].instruction, "Example 1:");
  EXPECT_EQ(out.rewritten[1].code, "b('t')\nnoop()\n");
}

}  // namespace
}  // namespace webskill::llm
