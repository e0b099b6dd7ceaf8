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

#include "webskill/dsl/interpreter.hpp"

#include <map>

namespace webskill::dsl {

std::optional<StepError> ExecutionTrace::final_error() const {
  if (steps.empty()) return std::nullopt;
  return steps.back().error;
}

InterpretError::InterpretError(std::string kind, const std::string& message,
                               ExecutionTrace partial)
    : Error(kind + ": " + message), kind_(std::move(kind)), partial_(std::move(partial)) {}

namespace {

using Scope = std::map<std::string, Value, std::less<>>;

std::int64_t normalize_index(std::int64_t i, std::size_t size) {
  return i < 0 ? i + static_cast<std::int64_t>(size) : i;
}

class Interpreter {
 public:
  Interpreter(Environment& env, const SkillResolver& library) : env_(env), library_(library) {}

  void call(const SkillProgram& skill, std::span<const Value> args, int depth) {
    if (args.size() < skill.min_arity() || args.size() > skill.max_arity()) {
      throw ArityMismatch(skill.name + " takes " + std::to_string(skill.min_arity()) +
                          (skill.min_arity() == skill.max_arity()
                               ? ""
                               : "-" + std::to_string(skill.max_arity())) +
                          " argument(s), got " + std::to_string(args.size()));
    }
    Scope scope;
    for (std::size_t i = 0; i < skill.params.size(); ++i) {
      const Param& p = skill.params[i];
      scope[p.name] = i < args.size() ? args[i] : *p.default_value;
    }
    exec_block(skill.body, scope, depth);
  }

  ExecutionTrace take_trace() { return std::move(trace_); }
  const ExecutionTrace& trace() const { return trace_; }

 private:
  void exec_block(const std::vector<Statement>& body, Scope& scope, int depth) {
    for (const auto& st : body) {
      if (trace_.truncated_by_error) return;
      exec(st, scope, depth);
    }
  }

  void exec(const Statement& st, Scope& scope, int depth) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, PrimitiveCall>) {
            Action action{std::string(primitive_name(n.kind)), eval_args(n.args, scope)};
            run_primitive(action);
          } else if constexpr (std::is_same_v<T, SkillCall>) {
            const SkillProgram* callee = library_ ? library_(n.name) : nullptr;
            if (!callee) throw EvaluationError("unknown skill '" + n.name + "'");
            if (depth <= 1) {
              throw DepthExceeded("call to '" + n.name + "' exceeds the nesting depth limit");
            }
            ValueList args = eval_args(n.args, scope);
            call(*callee, args, depth - 1);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            if (eval_condition(n.condition, scope)) {
              exec_block(n.then_body, scope, depth);
            } else {
              exec_block(n.else_body, scope, depth);
            }
          } else {
            Value iterable = eval(n.iterable, scope);
            if (!iterable.is_list()) {
              throw EvaluationError("for loop over a non-list value " + to_literal(iterable));
            }
            const ValueList items = iterable.as_list();
            Scope inner = scope;
            for (std::size_t i = 0; i < items.size(); ++i) {
              if (trace_.truncated_by_error) return;
              if (n.enumerate) {
                inner[n.vars[0]] = Value(static_cast<double>(i));
                inner[n.vars[1]] = items[i];
              } else {
                inner[n.vars[0]] = items[i];
              }
              exec_block(n.body, inner, depth);
            }
          }
        },
        st.node);
  }

  void run_primitive(const Action& action) {
    TraceStep step;
    step.action = action;
    step.before = env_.fingerprint();
    StepOutcome outcome = env_.step(action);
    step.after = env_.fingerprint();
    if (outcome.is_error()) {
      step.error = outcome.error;
      trace_.truncated_by_error = true;
    }
    trace_.steps.push_back(std::move(step));
  }

  ValueList eval_args(const std::vector<Expr>& args, const Scope& scope) {
    ValueList out;
    out.reserve(args.size());
    for (const auto& a : args) out.push_back(eval(a, scope));
    return out;
  }

  const Value& lookup(const std::string& name, const Scope& scope) const {
    auto it = scope.find(name);
    if (it == scope.end()) throw UnboundIdentifier("'" + name + "' is not bound");
    return it->second;
  }

  Value eval(const Expr& e, const Scope& scope) {
    return std::visit(
        [&](const auto& n) -> Value {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, VarRef>) {
            return lookup(n.name, scope);
          } else if constexpr (std::is_same_v<T, IndexExpr>) {
            const Value& base = lookup(n.base, scope);
            if (!base.is_list()) throw EvaluationError("'" + n.base + "' is not a list");
            const auto& items = base.as_list();
            std::int64_t i = normalize_index(n.index, items.size());
            if (i < 0 || i >= static_cast<std::int64_t>(items.size())) {
              throw EvaluationError("index " + std::to_string(n.index) + " out of range for '" +
                                    n.base + "'");
            }
            return items[static_cast<std::size_t>(i)];
          } else if constexpr (std::is_same_v<T, SliceExpr>) {
            const Value& base = lookup(n.base, scope);
            if (!base.is_list()) throw EvaluationError("'" + n.base + "' is not a list");
            const auto& items = base.as_list();
            auto size = static_cast<std::int64_t>(items.size());
            auto clamp = [&](std::int64_t v) {
              v = normalize_index(v, items.size());
              return std::max<std::int64_t>(0, std::min(v, size));
            };
            std::int64_t lo = n.start ? clamp(*n.start) : 0;
            std::int64_t hi = n.stop ? clamp(*n.stop) : size;
            ValueList out;
            for (std::int64_t i = lo; i < hi; ++i) out.push_back(items[static_cast<std::size_t>(i)]);
            return Value(std::move(out));
          } else if constexpr (std::is_same_v<T, ListLit>) {
            ValueList out;
            for (const auto& item : n.items) out.push_back(eval(item, scope));
            return Value(std::move(out));
          } else {
            return *literal_value(e);
          }
        },
        e.node);
  }

  bool eval_condition(const Condition& c, const Scope& scope) {
    return std::visit(
        [&](const auto& n) -> bool {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, TruthTest>) {
            return eval(n.operand, scope).truthy();
          } else if constexpr (std::is_same_v<T, NotCond>) {
            return !eval_condition(n.inner.front(), scope);
          } else if constexpr (std::is_same_v<T, NoneTest>) {
            return eval(n.operand, scope).is_none() != n.negated;
          } else {
            ValueList args = eval_args(n.args, scope);
            try {
              return env_.eval_predicate(n.name, args);
            } catch (const InterpretError&) {
              throw;
            } catch (const Error& e) {
              throw EvaluationError(e.what());
            }
          }
        },
        c.node);
  }

  Environment& env_;
  const SkillResolver& library_;
  ExecutionTrace trace_;
};

}  // namespace

ExecutionTrace interpret_call(const SkillProgram& skill, std::span<const Value> args,
                              Environment& env, const SkillResolver& library, int depth_limit) {
  if (depth_limit < 1) throw DepthExceeded("depth limit must be at least 1");
  Interpreter interp(env, library);
  try {
    interp.call(skill, args, depth_limit);
  } catch (InterpretError& e) {
    e.set_partial_trace(interp.take_trace());
    throw;
  }
  return interp.take_trace();
}

}  // namespace webskill::dsl
