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

#include "webskill/verification/checkpoint.hpp"

#include <algorithm>
#include <cctype>

#include "webskill/websim/engine.hpp"

namespace webskill::verification {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool any_message_contains(const std::vector<std::string>& log, const std::string& needle) {
  std::string n = lower(needle);
  return std::any_of(log.begin(), log.end(), [&](const std::string& m) { return lower(m).find(n) != std::string::npos; });
}

}  // namespace

bool checkpoint_passes(const websim::CheckpointSpec& spec, const agent::Episode& episode,
                       const websim::SiteSpec& site) {
  const auto& state = episode.final_state;
  switch (spec.kind) {
    case websim::CheckpointKind::message_contains: {
      if (spec.substrings.empty()) return false;
      auto hit = [&](const std::string& s) { return any_message_contains(state.message_log, s); };
      return spec.require_all ? std::all_of(spec.substrings.begin(), spec.substrings.end(), hit)
                              : std::any_of(spec.substrings.begin(), spec.substrings.end(), hit);
    }
    case websim::CheckpointKind::url_visited:
      return std::find(state.url_log.begin(), state.url_log.end(), spec.url) != state.url_log.end();
    case websim::CheckpointKind::element_value_equals: {
      const auto* page = site.find_page(spec.page);
      const auto* element = page ? page->find_element(spec.bid) : nullptr;
      return element && websim::element_value(state, *element) == spec.value;
    }
    case websim::CheckpointKind::flag_equals: {
      const auto* f = state.flag(spec.name);
      return f && websim::flag_text(*f) == spec.value;
    }
    case websim::CheckpointKind::flag_list_contains: {
      const auto* f = state.flag(spec.name);
      if (!f) return false;
      if (const auto* list = std::get_if<std::vector<std::string>>(f)) {
        return std::find(list->begin(), list->end(), spec.value) != list->end();
      }
      return std::get<std::string>(*f) == spec.value;
    }
  }
  return false;
}

double checkpoint_score(const agent::Episode& episode, const websim::SiteSpec& site,
                        const std::vector<websim::CheckpointSpec>& specs) {
  if (specs.empty()) throw Error("checkpoint_score needs at least one checkpoint");
  double total = 0, passed = 0;
  for (const auto& s : specs) {
    total += s.weight;
    if (checkpoint_passes(s, episode, site)) passed += s.weight;
  }
  if (total <= 0) throw Error("checkpoint weights must sum to a positive value");
  return passed / total;
}

}  // namespace webskill::verification
