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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "webskill/dsl/environment.hpp"

namespace webskill::websim {

using FlagValue = std::variant<std::string, std::vector<std::string>>;
std::string flag_text(const FlagValue& v);

struct Tab {
  std::string url;
  std::vector<std::string> back;
  std::vector<std::string> forward;
  bool operator==(const Tab&) const = default;
};

struct EnvState {
  std::vector<Tab> tabs;
  std::size_t focused = 0;
  std::map<std::string, std::string> overrides;  // keyed by bid, site-wide
  std::optional<std::string> popup;
  std::map<std::string, FlagValue> flags;
  std::vector<std::string> message_log;
  std::optional<dsl::StepError> step_error;
  /// Every url the focused tab has displayed, in order.
  std::vector<std::string> url_log;

  const std::string& current_url() const { return tabs.at(focused).url; }
  const FlagValue* flag(const std::string& name) const;

  bool operator==(const EnvState&) const = default;
};

/// FNV-1a over url, overrides, popup, flags and message count.
dsl::Fingerprint fingerprint(const EnvState& s);

}  // namespace webskill::websim
