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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "webskill/dsl/ast.hpp"
#include "webskill/dsl/environment.hpp"
#include "webskill/dsl/validator.hpp"
#include "webskill/error.hpp"

namespace webskill::dsl {

struct TraceStep {
  Action action;
  Fingerprint before;
  Fingerprint after;
  std::optional<StepError> error;
  bool operator==(const TraceStep&) const = default;
};

/// Flat primitive-level record of one skill call.
struct ExecutionTrace {
  std::vector<TraceStep> steps;
  bool truncated_by_error = false;

  std::optional<StepError> final_error() const;
  bool operator==(const ExecutionTrace&) const = default;
};

inline constexpr int kDefaultDepthLimit = 3;

/// Raised when a call cannot proceed; carries the trace executed so far.
class InterpretError : public Error {
 public:
  InterpretError(std::string kind, const std::string& message, ExecutionTrace partial = {});
  const std::string& kind() const { return kind_; }
  const ExecutionTrace& partial_trace() const { return partial_; }
  void set_partial_trace(ExecutionTrace t) { partial_ = std::move(t); }

 private:
  std::string kind_;
  ExecutionTrace partial_;
};

class ArityMismatch : public InterpretError {
 public:
  explicit ArityMismatch(const std::string& m) : InterpretError("ArityMismatch", m) {}
};
class DepthExceeded : public InterpretError {
 public:
  explicit DepthExceeded(const std::string& m) : InterpretError("DepthExceeded", m) {}
};
class UnboundIdentifier : public InterpretError {
 public:
  explicit UnboundIdentifier(const std::string& m) : InterpretError("UnboundIdentifier", m) {}
};
/// Index out of range, iterating a non-list, unknown callee at run time.
class EvaluationError : public InterpretError {
 public:
  explicit EvaluationError(const std::string& m) : InterpretError("EvaluationError", m) {}
};

/// Binds `args` (defaults fill trailing parameters), runs the body against
/// `env`, expanding nested skill calls with depth_limit - 1. Stops at the
/// first environment error and marks the trace truncated.
ExecutionTrace interpret_call(const SkillProgram& skill, std::span<const Value> args,
                              Environment& env, const SkillResolver& library,
                              int depth_limit = kDefaultDepthLimit);

}  // namespace webskill::dsl
