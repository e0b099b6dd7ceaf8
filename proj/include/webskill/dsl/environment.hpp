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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "webskill/dsl/value.hpp"

namespace webskill::dsl {

/// Fixed-length digest of observable environment state.
struct Fingerprint {
  std::uint64_t digest = 0;

  std::string hex() const;
  auto operator<=>(const Fingerprint&) const = default;
};

enum class StepErrorKind {
  unknown_element,
  invalid_argument,
  element_obscured,
  navigation_error,
  unknown_action,
  skill_runtime,
  parse_failure,
};
std::string_view to_string(StepErrorKind kind);
std::optional<StepErrorKind> parse_step_error_kind(std::string_view s);

struct StepError {
  StepErrorKind kind;
  std::string message;
  bool operator==(const StepError&) const = default;
};

enum class OutcomeKind { ok, no_effect, error };
std::string_view to_string(OutcomeKind kind);

struct StepOutcome {
  OutcomeKind kind = OutcomeKind::ok;
  std::optional<StepError> error;

  static StepOutcome ok() { return {OutcomeKind::ok, std::nullopt}; }
  static StepOutcome no_effect() { return {OutcomeKind::no_effect, std::nullopt}; }
  static StepOutcome failure(StepErrorKind kind, std::string message) {
    return {OutcomeKind::error, StepError{kind, std::move(message)}};
  }
  bool is_error() const { return kind == OutcomeKind::error; }
  bool operator==(const StepOutcome&) const = default;
};

/// What the skill interpreter needs from a browser: execute one primitive,
/// report a state digest, and answer condition predicates.
class Environment {
 public:
  virtual ~Environment() = default;
  virtual StepOutcome step(const Action& action) = 0;
  virtual Fingerprint fingerprint() const = 0;
  /// Throws UnknownPredicate for names outside the predicate table.
  virtual bool eval_predicate(std::string_view name, std::span<const Value> args) const = 0;
};

}  // namespace webskill::dsl
