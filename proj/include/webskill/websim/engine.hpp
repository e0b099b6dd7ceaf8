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

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "webskill/dsl/environment.hpp"
#include "webskill/websim/site.hpp"
#include "webskill/websim/state.hpp"

namespace webskill::websim {

inline constexpr std::string_view kBlankUrl = "about:blank";

struct Observation {
  std::string text;
  std::string url;
};

EnvState reset(const SiteSpec& site);
/// A fresh state already showing `url`; used by exhaustive sweeps.
EnvState reset_at(const SiteSpec& site, const std::string& url);

/// The transition function. Errors leave `state` untouched apart from
/// step_error.
dsl::StepOutcome step(EnvState& state, const SiteSpec& site, const dsl::Action& action);

Observation observe(const EnvState& state, const SiteSpec& site);

/// Throws Error("UnknownPredicate...") for names outside the predicate table.
bool eval_predicate(const EnvState& state, const SiteSpec& site, std::string_view name,
                    std::span<const dsl::Value> args);

/// Rows a dynamic page currently lists, in display order.
std::vector<const Record*> query_rows(const EnvState& state, const SiteSpec& site,
                                      const DynamicQuery& q);

/// Current value of an element: override, bound flag, then initial value.
std::string element_value(const EnvState& state, const ElementSpec& e);

/// Adapter that lets the skill interpreter drive a simulated site.
class WebEnvironment : public dsl::Environment {
 public:
  explicit WebEnvironment(std::shared_ptr<const SiteSpec> site);

  dsl::StepOutcome step(const dsl::Action& action) override;
  dsl::Fingerprint fingerprint() const override;
  bool eval_predicate(std::string_view name, std::span<const dsl::Value> args) const override;

  void reset();
  Observation observe() const;
  const EnvState& state() const { return state_; }
  EnvState& mutable_state() { return state_; }
  const SiteSpec& site() const { return *site_; }
  std::shared_ptr<const SiteSpec> site_ptr() const { return site_; }

 private:
  std::shared_ptr<const SiteSpec> site_;
  EnvState state_;
};

}  // namespace webskill::websim
