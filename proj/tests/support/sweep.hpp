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

// One probe per transition rule of a site: the page's reset state and an
// action that triggers the rule.

#include <string>
#include <vector>

#include "webskill/websim/engine.hpp"

namespace webskill::testing {

inline dsl::Action sweep_action(std::string name, dsl::ValueList args = {}) {
  return dsl::Action{std::move(name), std::move(args)};
}

inline dsl::Action trigger_action(const websim::Rule& r, const websim::ElementSpec* e) {
  std::string value = r.on.value && *r.on.value != "*" ? *r.on.value : "sweep value";
  if (r.on.action == "fill") return sweep_action("fill", {r.on.bid, value});
  if (r.on.action == "select_option") {
    return sweep_action("select_option", {r.on.bid, r.on.value && *r.on.value != "*" ? value : e->options.back()});
  }
  if (r.on.action == "keyboard_press") return sweep_action("keyboard_press", {value});
  if (r.on.action == "scroll") return sweep_action("scroll", {0, 100});
  return sweep_action(r.on.action, {r.on.bid});
}

struct Probe {
  websim::EnvState state;
  dsl::Action action;
  std::string where;
};

inline std::vector<Probe> rule_probes(const websim::SiteSpec& site) {
  std::vector<Probe> probes;
  for (const auto& page : site.pages) {
    for (const auto& r : page.rules) {
      probes.push_back({websim::reset_at(site, page.url), trigger_action(r, page.find_element(r.on.bid)),
                        site.site_id + page.url});
    }
  }
  for (const auto& popup : site.popups) {
    for (const auto& r : popup.rules) {
      websim::EnvState s = websim::reset(site);
      s.popup = popup.id;
      probes.push_back({s, trigger_action(r, popup.find_element(r.on.bid)), site.site_id + "#" + popup.id});
    }
  }
  return probes;
}

}  // namespace webskill::testing
