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

#include <cstdlib>
#include <fstream>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/sweep.hpp"
#include "webskill/dsl/parser.hpp"
#include "webskill/dsl/interpreter.hpp"
#include "webskill/websim/engine.hpp"

namespace webskill::websim {
namespace {

using dsl::Action;
using dsl::OutcomeKind;
using dsl::StepErrorKind;
using dsl::Value;
using testing::load_site;

Action act(std::string name, dsl::ValueList args = {}) { return Action{std::move(name), std::move(args)}; }

TEST(SiteSpec, MiniShopPagesAndTables) {
  auto site = load_site("mini_shop");
  std::vector<std::string> urls;
  for (const auto& p : site->pages) urls.push_back(p.url);
  EXPECT_EQ(urls, (std::vector<std::string>{"/", "/search", "/category", "/product", "/cart", "/account/address"}));
  ASSERT_TRUE(site->data_tables.count("products"));
  EXPECT_EQ(site->data_tables.at("products").size(), 11u);
}

TEST(SiteSpec, AllBundledSitesAndTasksLoad) {
  for (const auto& id : testing::bundled_sites()) {
    auto site = load_site(id);
    EXPECT_EQ(site->site_id, id);
    auto tasks = testing::load_site_tasks(id);
    EXPECT_GE(tasks.size(), 6u) << id;
    EXPECT_LE(tasks.size(), 10u) << id;
    int multi = 0;
    for (const auto& t : tasks) {
      EXPECT_EQ(t.site_id, id);
      EXPECT_FALSE(t.checkpoints.empty()) << t.task_id;
      multi += t.checkpoints.size() >= 2;
    }
    EXPECT_GE(multi, 2) << id;
  }
}

TEST(SiteSpec, DanglingGotoIsRejected) {
  const char* doc = R"({"site_id":"s","start_url":"/","pages":[
    {"url":"/","title":"Home","elements":[{"bid":"1","role":"link","name":"Go"}],
     "rules":[{"on":{"bid":"1","action":"click"},"do":[{"goto":"/missing"}]}]}]})";
  EXPECT_THROW(load_site_spec(doc), DanglingReference);
}

TEST(SiteSpec, EmptyPagesIsSchemaError) {
  try {
    load_site_spec(R"({"site_id":"s","start_url":"/","pages":[]})");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "$.pages");
  }
}

TEST(SiteSpec, SchemaErrorsNameTheField) {
  try {
    load_site_spec(R"({"site_id":"s","start_url":"/","pages":[{"url":"/","elements":[{"bid":"1","role":"slider"}]}]})");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "$.pages[0].elements[0].role");
  }
  EXPECT_THROW(load_site_spec(R"({"site_id":"s","start_url":"/","pages":[{"url":"/","elements":[
    {"bid":"1","role":"combobox","name":"x","options":[]}]}]})"), SchemaError);
  EXPECT_THROW(load_site_spec(R"({"site_id":"s","start_url":"/","pages":[{"url":"/"},{"url":"/"}]})"), SchemaError);
  EXPECT_THROW(load_site_spec(R"({"site_id":"s","start_url":"/x","pages":[{"url":"/"}]})"), DanglingReference);
  EXPECT_THROW(load_site_spec(R"({"site_id":"s","start_url":"/","pages":[{"url":"/",
    "dynamic_query":{"table":"nope","label_fields":[],"bid_field":"id"}}]})"), DanglingReference);
  EXPECT_THROW(load_site_spec("{not json"), SchemaError);
}

TEST(Reset, StartsAtStartUrl) {
  auto site = load_site("mini_shop");
  auto s = reset(*site);
  EXPECT_EQ(s.current_url(), site->start_url);
  EXPECT_TRUE(s.overrides.empty());
  EXPECT_TRUE(s.message_log.empty());
  EXPECT_EQ(fingerprint(reset(*site)), fingerprint(s));
}

TEST(Reset, DiffersFromMutatedState) {
  auto site = load_site("mini_shop");
  auto s = reset(*site);
  ASSERT_EQ(step(s, *site, act("click", {"121"})).kind, OutcomeKind::ok);
  EXPECT_NE(fingerprint(s), fingerprint(reset(*site)));
}

TEST(Step, FillOnReviewsPage) {
  auto site = load_site("mini_admin");
  auto s = reset_at(*site, "/admin/reviews");
  auto out = step(s, *site, act("fill", {"757", "satisfied"}));
  EXPECT_EQ(out.kind, OutcomeKind::ok);
  EXPECT_EQ(s.overrides, (std::map<std::string, std::string>{{"757", "satisfied"}}));
}

TEST(Step, NoopIsNoEffect) {
  auto site = load_site("mini_shop");
  auto s = reset(*site);
  auto before = fingerprint(s);
  EXPECT_EQ(step(s, *site, act("noop", {500})).kind, OutcomeKind::no_effect);
  EXPECT_EQ(fingerprint(s), before);
}

TEST(Step, UnknownElementLeavesStateAlone) {
  auto site = load_site("mini_shop");
  auto s = reset(*site);
  auto before = s;
  auto out = step(s, *site, act("click", {"9999"}));
  ASSERT_TRUE(out.is_error());
  EXPECT_EQ(out.error->kind, StepErrorKind::unknown_element);
  EXPECT_EQ(fingerprint(s), fingerprint(before));
  ASSERT_TRUE(s.step_error.has_value());
  s.step_error.reset();
  EXPECT_EQ(s, before);
}

TEST(Step, SearchEmitsSubstringResults) {
  auto site = load_site("mini_shop");
  auto s = reset_at(*site, "/search");
  step(s, *site, act("fill", {"101", "mug"}));
  ASSERT_EQ(step(s, *site, act("click", {"102"})).kind, OutcomeKind::ok);
  EXPECT_EQ(s.current_url(), "/search");
  const auto& q = *site->find_page("/search")->dynamic_query;
  std::vector<std::string> ids;
  for (const Record* r : query_rows(s, *site, q)) ids.push_back(field_text(r->at("id")));
  // Hand-evaluated: "mug" is a substring of two product names.
  EXPECT_EQ(ids, (std::vector<std::string>{"p-mug", "p-travel-mug"}));
}

TEST(Step, SelectUnlistedOptionIsInvalid) {
  auto site = load_site("mini_shop");
  auto s = reset(*site);
  step(s, *site, act("click", {"120"}));
  auto before = fingerprint(s);
  auto out = step(s, *site, act("select_option", {"1553", "Rating"}));
  ASSERT_TRUE(out.is_error());
  EXPECT_EQ(out.error->kind, StepErrorKind::invalid_argument);
  EXPECT_EQ(fingerprint(s), before);
}

TEST(Step, SortByPriceOrdersRows) {
  auto site = load_site("mini_shop");
  auto s = reset(*site);
  step(s, *site, act("click", {"120"}));
  step(s, *site, act("select_option", {"1553", "Price"}));
  auto obs = observe(s, *site).text;
  auto racer = obs.find("Turbo Racer"), island = obs.find("Puzzle Island"), quest = obs.find("Adventure Quest");
  ASSERT_NE(racer, std::string::npos);
  EXPECT_LT(racer, island);
  EXPECT_LT(island, quest);
}

TEST(Step, SortAliasesOnRedesignedShop) {
  auto site = load_site("mini_shop_v2");
  auto s = reset(*site);
  step(s, *site, act("click", {"121"}));
  EXPECT_TRUE(step(s, *site, act("select_option", {"1553", "Price"})).is_error());
  step(s, *site, act("select_option", {"1560", "Price: Low to High"}));
  auto obs = observe(s, *site).text;
  EXPECT_LT(obs.find("Gel Pen Set"), obs.find("Spiral Notebook"));
  EXPECT_LT(obs.find("Spiral Notebook"), obs.find("Desktop Stapler"));
}

TEST(Step, PopupObscuresPage) {
  auto site = load_site("mini_shop");
  auto s = reset(*site);
  step(s, *site, act("click", {"101"}));
  ASSERT_TRUE(s.popup.has_value());
  auto out = step(s, *site, act("click", {"102"}));
  ASSERT_TRUE(out.is_error());
  EXPECT_EQ(out.error->kind, StepErrorKind::element_obscured);
  EXPECT_EQ(step(s, *site, act("click", {"901"})).kind, OutcomeKind::ok);
  EXPECT_FALSE(s.popup.has_value());
}

TEST(Step, NavigationAndTabs) {
  auto site = load_site("mini_shop");
  auto s = reset(*site);
  EXPECT_EQ(step(s, *site, act("go_back")).kind, OutcomeKind::no_effect);
  auto bad = step(s, *site, act("goto", {"/nowhere"}));
  ASSERT_TRUE(bad.is_error());
  EXPECT_EQ(bad.error->kind, StepErrorKind::navigation_error);
  step(s, *site, act("goto", {"/cart"}));
  step(s, *site, act("go_back"));
  EXPECT_EQ(s.current_url(), "/");
  step(s, *site, act("go_forward"));
  EXPECT_EQ(s.current_url(), "/cart");

  EXPECT_TRUE(step(s, *site, act("tab_close")).is_error());
  step(s, *site, act("new_tab"));
  EXPECT_EQ(s.current_url(), kBlankUrl);
  EXPECT_EQ(observe(s, *site).text, "RootWebArea ''\n");
  EXPECT_TRUE(step(s, *site, act("tab_focus", {2})).is_error());
  step(s, *site, act("tab_focus", {0}));
  EXPECT_EQ(s.current_url(), "/cart");
  step(s, *site, act("tab_focus", {1}));
  step(s, *site, act("tab_close"));
  EXPECT_EQ(s.tabs.size(), 1u);
  EXPECT_EQ(s.current_url(), "/cart");
}

TEST(Step, RoleChecks) {
  auto site = load_site("mini_shop");
  auto s = reset(*site);
  EXPECT_EQ(step(s, *site, act("fill", {"102", "x"})).error->kind, StepErrorKind::invalid_argument);
  EXPECT_EQ(step(s, *site, act("select_option", {"101", "x"})).error->kind, StepErrorKind::invalid_argument);
  EXPECT_EQ(step(s, *site, act("click")).error->kind, StepErrorKind::invalid_argument);
  EXPECT_EQ(step(s, *site, act("teleport", {"1"})).error->kind, StepErrorKind::unknown_action);
  EXPECT_EQ(step(s, *site, act("scroll", {0, 300})).kind, OutcomeKind::no_effect);
  EXPECT_EQ(step(s, *site, act("hover", {"110"})).kind, OutcomeKind::no_effect);
}

TEST(Step, IntegerElementIdsAreAccepted) {
  auto site = load_site("mini_admin");
  auto s = reset_at(*site, "/admin/reviews");
  EXPECT_EQ(step(s, *site, act("fill", {757, "satisfied"})).kind, OutcomeKind::ok);
  EXPECT_EQ(s.overrides.at("757"), "satisfied");
}

TEST(Step, MessageChangesFingerprint) {
  auto site = load_site("mini_admin");
  auto s = reset(*site);
  auto before = fingerprint(s);
  EXPECT_EQ(step(s, *site, act("send_msg_to_user", {"2"})).kind, OutcomeKind::ok);
  EXPECT_NE(fingerprint(s), before);
  EXPECT_EQ(s.message_log, (std::vector<std::string>{"2"}));
}

TEST(Step, CartAccumulates) {
  auto site = load_site("mini_shop");
  auto s = reset(*site);
  for (const char* term : {"mug", "bottle"}) {
    step(s, *site, act("fill", {"101", term}));
    step(s, *site, act("click", {"102"}));
    auto rows = query_rows(s, *site, *site->find_page("/search")->dynamic_query);
    ASSERT_FALSE(rows.empty());
    step(s, *site, act("click", {field_text(rows[0]->at("id"))}));
    EXPECT_EQ(s.current_url(), "/product");
    step(s, *site, act("click", {"210"}));
  }
  ASSERT_TRUE(s.flag("cart"));
  EXPECT_EQ(flag_text(*s.flag("cart")), "p-mug, p-bottle");
  step(s, *site, act("click", {"111"}));
  EXPECT_NE(observe(s, *site).text.find("[301] statictext 'Cart items' value='p-mug, p-bottle'"), std::string::npos);
}

TEST(Predicates, PopupElementAndText) {
  auto site = load_site("mini_admin");
  auto s = reset(*site);
  EXPECT_FALSE(eval_predicate(s, *site, "has_popup_window", {}));
  auto reviews = reset_at(*site, "/admin/reviews");
  Value bid("757");
  EXPECT_TRUE(eval_predicate(reviews, *site, "element_exists", std::span<const Value>(&bid, 1)));
  Value term("satisfied");
  EXPECT_FALSE(eval_predicate(reviews, *site, "text_present", std::span<const Value>(&term, 1)));
  step(reviews, *site, act("fill", {"757", "satisfied"}));
  step(reviews, *site, act("click", {"1239"}));
  EXPECT_TRUE(eval_predicate(reviews, *site, "text_present", std::span<const Value>(&term, 1)));
  EXPECT_THROW(eval_predicate(reviews, *site, "is_logged_in", {}), Error);
}

TEST(Observe, ReviewsPageShowsSearchBox) {
  auto site = load_site("mini_admin");
  auto obs = observe(reset_at(*site, "/admin/reviews"), *site);
  EXPECT_NE(obs.text.find("[757] textbox 'Search reviews'"), std::string::npos);
  EXPECT_EQ(obs.text.rfind("RootWebArea 'Reviews'\n", 0), 0u);
}

TEST(Observe, EmptyPageIsSingleLine) {
  auto site = load_site_spec(R"({"site_id":"s","start_url":"/","pages":[{"url":"/","title":"Blank"}]})");
  EXPECT_EQ(observe(reset(*site), *site).text, "RootWebArea 'Blank'\n");
}

// Golden transcript: observations along a fixed action script. The golden
// file was reviewed by hand against the site spec.
TEST(Observe, GoldenTranscript) {
  auto site = load_site("mini_shop");
  auto s = reset(*site);
  std::string transcript;
  const std::vector<Action> script = {
      act("click", {"101"}), act("click", {"901"}), act("fill", {"101", "mug"}), act("click", {"102"}),
      act("click", {"p-mug"}), act("click", {"210"}), act("click", {"120"}),
      act("select_option", {"1553", "Price"}), act("click", {"110"}), act("fill", {"401", "1 Main St"}),
      act("click", {"402"})};
  transcript += observe(s, *site).text;
  for (const auto& a : script) {
    auto out = step(s, *site, a);
    transcript += "## " + a.to_string() + " -> " + std::string(dsl::to_string(out.kind)) + " " +
                  fingerprint(s).hex() + "\n";
    transcript += observe(s, *site).text;
  }
  std::string golden = std::string(WEBSKILL_TEST_DIR) + "/golden/mini_shop_transcript.txt";
  if (std::getenv("WEBSKILL_UPDATE_GOLDEN")) std::ofstream(golden) << transcript;
  EXPECT_EQ(transcript, testing::read_file(golden));
}

// --- exhaustive invariants over every rule of every bundled site ---------

using testing::rule_probes;

TEST(Invariants, EveryRuleFlipsFingerprintDeterministically) {
  std::size_t total = 0;
  for (const auto& id : testing::bundled_sites()) {
    auto site = load_site(id);
    for (auto& p : rule_probes(*site)) {
      EnvState a = p.state, b = p.state;
      auto before = fingerprint(p.state);
      auto oa = step(a, *site, p.action);
      auto ob = step(b, *site, p.action);
      EXPECT_EQ(oa.kind, OutcomeKind::ok) << p.where << " " << p.action.to_string();
      EXPECT_NE(fingerprint(a), before) << p.where << " " << p.action.to_string();
      EXPECT_EQ(fingerprint(a), fingerprint(b));
      EXPECT_EQ(a, b);
      ++total;
    }
  }
  EXPECT_GT(total, 50u);
}

TEST(Invariants, ErrorsAndNoopsNeverMutate) {
  for (const auto& id : testing::bundled_sites()) {
    auto site = load_site(id);
    for (const auto& page : site->pages) {
      auto base = reset_at(*site, page.url);
      const std::vector<Action> bad = {act("click", {"no-such-bid"}), act("fill", {"no-such-bid", "x"}),
                                       act("goto", {"/no/such/page"}), act("tab_focus", {7}),
                                       act("tab_close"), act("launch_rocket")};
      for (const auto& a : bad) {
        EnvState s = base;
        auto out = step(s, *site, a);
        EXPECT_TRUE(out.is_error()) << a.to_string();
        EXPECT_EQ(fingerprint(s), fingerprint(base)) << a.to_string();
      }
      for (const auto& e : page.elements) {
        EnvState s = base;
        if (e.role == Role::combobox) {
          EXPECT_TRUE(step(s, *site, act("select_option", {e.bid, "not an option"})).is_error());
        } else {
          EXPECT_TRUE(step(s, *site, act("select_option", {e.bid, "x"})).is_error());
        }
        EXPECT_EQ(fingerprint(s), fingerprint(base));
      }
      EnvState s = base;
      EXPECT_EQ(step(s, *site, act("noop")).kind, OutcomeKind::no_effect);
      EXPECT_EQ(fingerprint(s), fingerprint(base));
    }
  }
}

TEST(Invariants, TriggerBidsAreObservable) {
  for (const auto& id : testing::bundled_sites()) {
    auto site = load_site(id);
    for (const auto& page : site->pages) {
      auto text = observe(reset_at(*site, page.url), *site).text;
      for (const auto& r : page.rules) {
        if (!r.on.bid.empty()) EXPECT_NE(text.find("[" + r.on.bid + "]"), std::string::npos) << page.url;
      }
    }
  }
}

TEST(Invariants, BackAfterGotoReturns) {
  for (const auto& id : testing::bundled_sites()) {
    auto site = load_site(id);
    for (const auto& from : site->pages) {
      for (const auto& to : site->pages) {
        auto s = reset_at(*site, from.url);
        step(s, *site, act("goto", {to.url}));
        step(s, *site, act("go_back"));
        EXPECT_EQ(s.current_url(), from.url);
      }
    }
  }
}

TEST(Invariants, ObservationIsDeterministic) {
  for (const auto& id : testing::bundled_sites()) {
    auto site = load_site(id);
    for (const auto& page : site->pages) {
      EXPECT_EQ(observe(reset_at(*site, page.url), *site).text, observe(reset_at(*site, page.url), *site).text);
    }
  }
}

TEST(WebEnvironment, DrivesSkillsWithPopupGuard) {
  auto site = load_site("mini_shop");
  auto skill = dsl::parse_single_skill(
      "def search_product(name: str):\n"
      "    click('101')\n"
      "    if has_popup_window():\n"
      "        click('901')\n"
      "    fill('101', name)\n"
      "    click('102')\n");
  WebEnvironment env(site);
  auto trace = dsl::interpret_call(skill, dsl::ValueList{"coffee"}, env,
                                   [](std::string_view) -> const dsl::SkillProgram* { return nullptr; });
  ASSERT_EQ(trace.steps.size(), 4u);
  EXPECT_EQ(trace.steps[1].action.to_string(), "click('901')");
  EXPECT_FALSE(trace.truncated_by_error);
  EXPECT_EQ(env.state().current_url(), "/search");
  EXPECT_NE(env.observe().text.find("Colombian Ground Coffee"), std::string::npos);
}

TEST(WebEnvironment, SearchReviewsHasThreeStateChanges) {
  auto site = load_site("mini_admin");
  auto skill = dsl::parse_single_skill(testing::read_file(testing::data_path("skills/reference/search_reviews.py")));
  WebEnvironment env(site);
  env.mutable_state() = reset_at(*site, "/admin/reviews");
  auto trace = dsl::interpret_call(skill, dsl::ValueList{"757", "1239", "satisfied"}, env,
                                   [](std::string_view) -> const dsl::SkillProgram* { return nullptr; });
  ASSERT_EQ(trace.steps.size(), 3u);
  for (const auto& st : trace.steps) EXPECT_NE(st.before, st.after) << st.action.to_string();
  EXPECT_EQ(trace.steps[1].action.to_string(), "fill('757', 'satisfied')");
}

}  // namespace
}  // namespace webskill::websim
