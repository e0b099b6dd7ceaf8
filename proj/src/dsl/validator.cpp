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

#include "webskill/dsl/validator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "webskill/dsl/printer.hpp"

namespace webskill::dsl {

bool ValidationReport::has(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

namespace {

void collect_callees(const std::vector<Statement>& body, std::vector<std::string>& out) {
  for (const auto& st : body) {
    if (const auto* call = std::get_if<SkillCall>(&st.node)) {
      if (std::find(out.begin(), out.end(), call->name) == out.end()) out.push_back(call->name);
    } else if (const auto* branch = std::get_if<IfStmt>(&st.node)) {
      collect_callees(branch->then_body, out);
      collect_callees(branch->else_body, out);
    } else if (const auto* loop = std::get_if<ForStmt>(&st.node)) {
      collect_callees(loop->body, out);
    }
  }
}

class Checker {
 public:
  Checker(const SkillProgram& skill, const SkillResolver& library, ValidationReport& report)
      : skill_(skill), library_(library), report_(report) {}

  void run() {
    std::vector<std::string> scope;
    for (const auto& p : skill_.params) scope.push_back(p.name);
    check_block(skill_.body, scope);
    for (const auto& p : skill_.params) {
      if (!used_.count(p.name)) {
        add("unused-param", "parameter '" + p.name + "' is never used", {});
      }
    }
  }

 private:
  void add(std::string rule, std::string message, SourceLoc loc) {
    report_.violations.push_back({std::move(rule), std::move(message), loc});
  }

  void check_expr(const Expr& e, const std::vector<std::string>& scope) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, VarRef>) {
            use(n.name, scope, e.loc);
          } else if constexpr (std::is_same_v<T, IndexExpr> || std::is_same_v<T, SliceExpr>) {
            use(n.base, scope, e.loc);
          } else if constexpr (std::is_same_v<T, ListLit>) {
            for (const auto& item : n.items) check_expr(item, scope);
          }
        },
        e.node);
  }

  void use(const std::string& name, const std::vector<std::string>& scope, SourceLoc loc) {
    if (std::find(scope.begin(), scope.end(), name) == scope.end()) {
      add("unbound-identifier", "'" + name + "' is not a parameter or loop variable", loc);
      return;
    }
    used_.insert(name);
  }

  void check_condition(const Condition& c, const std::vector<std::string>& scope, SourceLoc loc) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, TruthTest> || std::is_same_v<T, NoneTest>) {
            check_expr(n.operand, scope);
          } else if constexpr (std::is_same_v<T, NotCond>) {
            check_condition(n.inner.front(), scope, loc);
          } else {
            for (const auto& a : n.args) check_expr(a, scope);
          }
        },
        c.node);
  }

  void check_block(const std::vector<Statement>& body, const std::vector<std::string>& scope) {
    for (const auto& st : body) check_statement(st, scope);
  }

  void check_statement(const Statement& st, const std::vector<std::string>& scope) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, PrimitiveCall>) {
            for (const auto& a : n.args) check_expr(a, scope);
            if (n.kind == PrimitiveKind::send_msg_to_user) {
              for (const auto& a : n.args) {
                if (!is_literal(a)) {
                  add("message-literal",
                      "send_msg_to_user must be given a literal message, not " + print_expr(a),
                      st.loc);
                }
              }
            }
          } else if constexpr (std::is_same_v<T, SkillCall>) {
            for (const auto& a : n.args) check_expr(a, scope);
            if (n.name == skill_.name) {
              add("acyclicity", "skill '" + n.name + "' calls itself", st.loc);
              return;
            }
            const SkillProgram* callee = library_ ? library_(n.name) : nullptr;
            if (!callee) {
              add("unknown-callee", "'" + n.name + "' is neither a primitive nor a library skill",
                  st.loc);
              return;
            }
            if (n.args.size() < callee->min_arity() || n.args.size() > callee->max_arity()) {
              add("arity", "'" + n.name + "' called with " + std::to_string(n.args.size()) +
                               " argument(s); signature is " + print_signature(*callee),
                  st.loc);
            }
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            check_condition(n.condition, scope, st.loc);
            check_block(n.then_body, scope);
            check_block(n.else_body, scope);
          } else {
            check_expr(n.iterable, scope);
            std::vector<std::string> inner = scope;
            for (const auto& v : n.vars) {
              if (std::find(scope.begin(), scope.end(), v) != scope.end()) {
                add("shadowing", "loop variable '" + v + "' shadows an outer name", st.loc);
              }
              inner.push_back(v);
            }
            check_block(n.body, inner);
          }
        },
        st.node);
  }

  const SkillProgram& skill_;
  const SkillResolver& library_;
  ValidationReport& report_;
  std::set<std::string> used_;
};

// Depth-first search for a cycle; colors: 0 unvisited, 1 on stack, 2 done.
bool dfs_acyclic(const std::string& name, const SkillResolver& resolver,
                 std::map<std::string, int>& color) {
  auto& c = color[name];
  if (c == 1) return false;
  if (c == 2) return true;
  c = 1;
  if (const SkillProgram* prog = resolver(name)) {
    for (const auto& callee : direct_callees(*prog)) {
      if (!dfs_acyclic(callee, resolver, color)) return false;
    }
  }
  color[name] = 2;
  return true;
}

}  // namespace

std::vector<std::string> direct_callees(const SkillProgram& skill) {
  std::vector<std::string> out;
  collect_callees(skill.body, out);
  return out;
}

bool call_graph_acyclic(const std::vector<std::string>& names, const SkillResolver& resolver) {
  std::map<std::string, int> color;
  for (const auto& n : names) {
    if (!dfs_acyclic(n, resolver, color)) return false;
  }
  return true;
}

ValidationReport validate_skill(const SkillProgram& skill, const SkillResolver& library,
                                StepBounds bounds) {
  ValidationReport report;
  std::size_t n = skill.body.size();
  if (n < bounds.min_steps || n > bounds.max_steps) {
    report.violations.push_back(
        {"step-count",
         "skill has " + std::to_string(n) + " top-level statement(s); allowed range is " +
             std::to_string(bounds.min_steps) + "-" + std::to_string(bounds.max_steps),
         skill.body.empty() ? SourceLoc{} : skill.body.front().loc});
  }
  Checker(skill, library, report).run();

  // Cycles through the library: resolve this skill to itself, others via library.
  if (!report.has("acyclicity")) {
    SkillResolver with_self = [&](std::string_view name) -> const SkillProgram* {
      if (name == skill.name) return &skill;
      return library ? library(name) : nullptr;
    };
    if (!call_graph_acyclic({skill.name}, with_self)) {
      report.violations.push_back(
          {"acyclicity", "skill '" + skill.name + "' participates in a call cycle", {}});
    }
  }
  return report;
}

}  // namespace webskill::dsl
