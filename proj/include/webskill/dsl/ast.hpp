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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "webskill/dsl/primitives.hpp"
#include "webskill/dsl/value.hpp"

namespace webskill::dsl {

/// Position in skill source (1-based). Locations never take part in
/// structural comparison, so a reparsed pretty-print equals the original.
struct SourceLoc {
  int line = 0;
  int column = 0;
  friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

struct Expr;

struct StringLit {
  std::string value;
  bool operator==(const StringLit&) const = default;
};
struct NumberLit {
  double value = 0;
  bool operator==(const NumberLit&) const = default;
};
struct BoolLit {
  bool value = false;
  bool operator==(const BoolLit&) const = default;
};
struct NoneLit {
  bool operator==(const NoneLit&) const = default;
};
struct ListLit {
  std::vector<Expr> items;
  bool operator==(const ListLit&) const;
};
/// Reference to a parameter or loop variable.
struct VarRef {
  std::string name;
  bool operator==(const VarRef&) const = default;
};
/// name[i] with an integer literal index (negative counts from the end).
struct IndexExpr {
  std::string base;
  std::int64_t index = 0;
  bool operator==(const IndexExpr&) const = default;
};
/// name[start:stop] with optional integer literal bounds.
struct SliceExpr {
  std::string base;
  std::optional<std::int64_t> start;
  std::optional<std::int64_t> stop;
  bool operator==(const SliceExpr&) const = default;
};

struct Expr {
  std::variant<StringLit, NumberLit, BoolLit, NoneLit, ListLit, VarRef, IndexExpr, SliceExpr> node;
  SourceLoc loc;
  bool operator==(const Expr&) const = default;
};

inline bool ListLit::operator==(const ListLit& other) const { return items == other.items; }

/// Literal expressions (no variable references anywhere inside).
bool is_literal(const Expr& e);
/// Converts a literal expression to its value; nullopt if it references variables.
std::optional<Value> literal_value(const Expr& e);
Expr expr_from_value(const Value& v);

struct Condition;

struct TruthTest {
  Expr operand;
  bool operator==(const TruthTest&) const = default;
};
struct NotCond {
  std::vector<Condition> inner;  // exactly one element
  bool operator==(const NotCond&) const;
};
struct NoneTest {
  Expr operand;
  bool negated = false;  // `is not None`
  bool operator==(const NoneTest&) const = default;
};
struct PredicateCall {
  std::string name;
  std::vector<Expr> args;
  bool operator==(const PredicateCall&) const = default;
};

struct Condition {
  std::variant<TruthTest, NotCond, NoneTest, PredicateCall> node;
  bool operator==(const Condition&) const = default;
};

inline bool NotCond::operator==(const NotCond& other) const { return inner == other.inner; }

struct Statement;

struct PrimitiveCall {
  PrimitiveKind kind = PrimitiveKind::noop;
  std::vector<Expr> args;
  bool operator==(const PrimitiveCall&) const = default;
};
struct SkillCall {
  std::string name;
  std::vector<Expr> args;
  bool operator==(const SkillCall&) const = default;
};
struct IfStmt {
  Condition condition;
  std::vector<Statement> then_body;
  std::vector<Statement> else_body;  // empty when there is no else
  bool operator==(const IfStmt&) const;
};
/// `for v in xs:` or `for i, v in enumerate(xs):`.
struct ForStmt {
  std::vector<std::string> vars;
  bool enumerate = false;
  Expr iterable;
  std::vector<Statement> body;
  bool operator==(const ForStmt&) const;
};

struct Statement {
  std::variant<PrimitiveCall, SkillCall, IfStmt, ForStmt> node;
  SourceLoc loc;
  bool operator==(const Statement&) const = default;
};

inline bool IfStmt::operator==(const IfStmt& o) const {
  return condition == o.condition && then_body == o.then_body && else_body == o.else_body;
}
inline bool ForStmt::operator==(const ForStmt& o) const {
  return vars == o.vars && enumerate == o.enumerate && iterable == o.iterable && body == o.body;
}

struct Param {
  std::string name;
  std::optional<std::string> type_hint;  // retained as written, not enforced
  std::optional<Value> default_value;
  bool operator==(const Param&) const = default;
};

enum class SkillStatus { candidate, verified, deprecated };
std::string_view to_string(SkillStatus s);
std::optional<SkillStatus> parse_skill_status(std::string_view s);

struct SkillProgram {
  std::string name;
  std::vector<Param> params;
  std::string docstring;
  std::vector<Statement> body;
  std::string source;

  // Library metadata.
  std::string ns;
  std::string origin_episode;
  SkillStatus status = SkillStatus::candidate;
  std::int64_t call_count = 0;
  std::string created_at;
  std::string imported_from;

  std::size_t min_arity() const;
  std::size_t max_arity() const { return params.size(); }
  /// e.g. "search_reviews(search_box_id: str, search_button_id, term)".
  std::string signature() const;
};

/// Name, parameters, docstring and body; source text and metadata ignored.
bool structurally_equal(const SkillProgram& a, const SkillProgram& b);

}  // namespace webskill::dsl
