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

#include "webskill/dsl/ast.hpp"

#include "webskill/dsl/printer.hpp"

namespace webskill::dsl {

bool is_literal(const Expr& e) { return literal_value(e).has_value(); }

std::optional<Value> literal_value(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::optional<Value> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, StringLit>) {
          return Value(n.value);
        } else if constexpr (std::is_same_v<T, NumberLit>) {
          return Value(n.value);
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          return Value(n.value);
        } else if constexpr (std::is_same_v<T, NoneLit>) {
          return Value::none();
        } else if constexpr (std::is_same_v<T, ListLit>) {
          ValueList items;
          for (const auto& item : n.items) {
            auto v = literal_value(item);
            if (!v) return std::nullopt;
            items.push_back(std::move(*v));
          }
          return Value(std::move(items));
        } else {
          return std::nullopt;
        }
      },
      e.node);
}

Expr expr_from_value(const Value& v) {
  Expr e;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          e.node = NoneLit{};
        } else if constexpr (std::is_same_v<T, bool>) {
          e.node = BoolLit{x};
        } else if constexpr (std::is_same_v<T, double>) {
          e.node = NumberLit{x};
        } else if constexpr (std::is_same_v<T, std::string>) {
          e.node = StringLit{x};
        } else {
          ListLit list;
          for (const auto& item : x) list.items.push_back(expr_from_value(item));
          e.node = std::move(list);
        }
      },
      v.data);
  return e;
}

std::string_view to_string(SkillStatus s) {
  switch (s) {
    case SkillStatus::candidate: return "candidate";
    case SkillStatus::verified: return "verified";
    case SkillStatus::deprecated: return "deprecated";
  }
  return "candidate";
}

std::optional<SkillStatus> parse_skill_status(std::string_view s) {
  if (s == "candidate") return SkillStatus::candidate;
  if (s == "verified") return SkillStatus::verified;
  if (s == "deprecated") return SkillStatus::deprecated;
  return std::nullopt;
}

std::size_t SkillProgram::min_arity() const {
  std::size_t n = 0;
  for (const auto& p : params) {
    if (!p.default_value) ++n;
  }
  return n;
}

std::string SkillProgram::signature() const { return print_signature(*this); }

bool structurally_equal(const SkillProgram& a, const SkillProgram& b) {
  return a.name == b.name && a.params == b.params && a.docstring == b.docstring &&
         a.body == b.body;
}

}  // namespace webskill::dsl
