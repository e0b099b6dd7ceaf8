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

#include "webskill/dsl/printer.hpp"

#include <sstream>

namespace webskill::dsl {
namespace {

void print_block(std::ostringstream& os, const std::vector<Statement>& body, int indent);

std::string print_args(const std::vector<Expr>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += print_expr(args[i]);
  }
  return out;
}

void print_statement(std::ostringstream& os, const Statement& st, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 4, ' ');
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PrimitiveCall>) {
          os << pad << primitive_name(n.kind) << '(' << print_args(n.args) << ")\n";
        } else if constexpr (std::is_same_v<T, SkillCall>) {
          os << pad << n.name << '(' << print_args(n.args) << ")\n";
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          os << pad << "if " << print_condition(n.condition) << ":\n";
          print_block(os, n.then_body, indent + 1);
          if (!n.else_body.empty()) {
            os << pad << "else:\n";
            print_block(os, n.else_body, indent + 1);
          }
        } else {
          os << pad << "for " << n.vars[0];
          if (n.vars.size() > 1) os << ", " << n.vars[1];
          os << " in ";
          if (n.enumerate) {
            os << "enumerate(" << print_expr(n.iterable) << ")";
          } else {
            os << print_expr(n.iterable);
          }
          os << ":\n";
          print_block(os, n.body, indent + 1);
        }
      },
      st.node);
}

void print_block(std::ostringstream& os, const std::vector<Statement>& body, int indent) {
  for (const auto& st : body) print_statement(os, st, indent);
}

void print_docstring(std::ostringstream& os, const std::string& doc) {
  std::string quotes = doc.find("\"\"\"") == std::string::npos ? "\"\"\"" : "'''";
  std::string escaped;
  for (char c : doc) {
    if (c == '\\') {
      escaped += "\\\\";
    } else {
      escaped += c;
    }
  }
  if (!escaped.empty() && (escaped.back() == quotes[0])) escaped += ' ';
  os << "    " << quotes;
  std::size_t start = 0;
  bool multiline = escaped.find('\n') != std::string::npos;
  while (true) {
    std::size_t nl = escaped.find('\n', start);
    std::string line = escaped.substr(start, nl == std::string::npos ? std::string::npos : nl - start);
    if (start == 0) {
      os << line;
    } else if (line.empty()) {
      os << '\n';
    } else {
      os << "\n    " << line;
    }
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
  if (multiline) os << "\n    ";
  os << quotes << '\n';
}

}  // namespace

std::string print_body(const std::vector<Statement>& body, int indent) {
  std::ostringstream os;
  print_block(os, body, indent);
  return os.str();
}

std::string print_expr(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, StringLit>) {
          return quote_string(n.value);
        } else if constexpr (std::is_same_v<T, NumberLit>) {
          return format_number(n.value);
        } else if constexpr (std::is_same_v<T, BoolLit>) {
          return n.value ? "True" : "False";
        } else if constexpr (std::is_same_v<T, NoneLit>) {
          return "None";
        } else if constexpr (std::is_same_v<T, ListLit>) {
          return "[" + print_args(n.items) + "]";
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, IndexExpr>) {
          return n.base + "[" + std::to_string(n.index) + "]";
        } else {
          std::string out = n.base + "[";
          if (n.start) out += std::to_string(*n.start);
          out += ":";
          if (n.stop) out += std::to_string(*n.stop);
          return out + "]";
        }
      },
      e.node);
}

std::string print_condition(const Condition& c) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, TruthTest>) {
          return print_expr(n.operand);
        } else if constexpr (std::is_same_v<T, NotCond>) {
          return "not " + print_condition(n.inner.front());
        } else if constexpr (std::is_same_v<T, NoneTest>) {
          return print_expr(n.operand) + (n.negated ? " is not None" : " is None");
        } else {
          return n.name + "(" + print_args(n.args) + ")";
        }
      },
      c.node);
}

std::string print_signature(const SkillProgram& skill) {
  std::string out = skill.name + "(";
  for (std::size_t i = 0; i < skill.params.size(); ++i) {
    const auto& p = skill.params[i];
    if (i) out += ", ";
    out += p.name;
    if (p.type_hint) out += ": " + *p.type_hint;
    if (p.default_value) out += (p.type_hint ? " = " : "=") + to_literal(*p.default_value);
  }
  return out + ")";
}

std::string pretty_print(const SkillProgram& skill) {
  std::ostringstream os;
  os << "def " << print_signature(skill) << ":\n";
  if (!skill.docstring.empty()) print_docstring(os, skill.docstring);
  print_block(os, skill.body, 1);
  return os.str();
}

}  // namespace webskill::dsl
