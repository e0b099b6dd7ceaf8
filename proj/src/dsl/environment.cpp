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

#include "webskill/dsl/environment.hpp"

#include <cstdio>

namespace webskill::dsl {

std::string Fingerprint::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

namespace {
constexpr std::pair<StepErrorKind, std::string_view> kErrorNames[] = {
    {StepErrorKind::unknown_element, "UnknownElement"},
    {StepErrorKind::invalid_argument, "InvalidArgument"},
    {StepErrorKind::element_obscured, "ElementObscured"},
    {StepErrorKind::navigation_error, "NavigationError"},
    {StepErrorKind::unknown_action, "UnknownActionName"},
    {StepErrorKind::skill_runtime, "SkillRuntimeError"},
    {StepErrorKind::parse_failure, "ParseFailure"},
};
}  // namespace

std::string_view to_string(StepErrorKind kind) {
  for (const auto& [k, name] : kErrorNames) {
    if (k == kind) return name;
  }
  return "Unknown";
}

std::optional<StepErrorKind> parse_step_error_kind(std::string_view s) {
  for (const auto& [k, name] : kErrorNames) {
    if (name == s) return k;
  }
  return std::nullopt;
}

std::string_view to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::ok: return "ok";
    case OutcomeKind::no_effect: return "no_effect";
    case OutcomeKind::error: return "error";
  }
  return "ok";
}

}  // namespace webskill::dsl
