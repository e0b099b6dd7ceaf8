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

#include <set>
#include <string>
#include <vector>

#include "webskill/dsl/environment.hpp"
#include "webskill/error.hpp"

namespace webskill::testing {

/// Records every primitive; each successful step bumps a counter so the
/// fingerprint changes. Elements listed in `failing` produce UnknownElement.
class FakeEnvironment : public dsl::Environment {
 public:
  std::vector<dsl::Action> log;
  std::set<std::string> failing;
  bool popup = false;
  int counter = 0;

  dsl::StepOutcome step(const dsl::Action& action) override {
    if (!action.args.empty() && action.args[0].is_string() &&
        failing.count(action.args[0].as_string())) {
      return dsl::StepOutcome::failure(dsl::StepErrorKind::unknown_element, "no such element");
    }
    log.push_back(action);
    if (action.name == "noop") return dsl::StepOutcome::no_effect();
    ++counter;
    return dsl::StepOutcome::ok();
  }

  dsl::Fingerprint fingerprint() const override {
    return {static_cast<std::uint64_t>(counter) * 0x9E3779B97F4A7C15ULL + (popup ? 1 : 0)};
  }

  bool eval_predicate(std::string_view name, std::span<const dsl::Value> args) const override {
    if (name == "has_popup_window") return popup;
    if (name == "element_exists") return !args.empty() && args[0].is_string() &&
                                         !failing.count(args[0].as_string());
    if (name == "text_present") return false;
    throw Error("UnknownPredicate: " + std::string(name));
  }
};

}  // namespace webskill::testing
