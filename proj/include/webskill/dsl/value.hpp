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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace webskill::dsl {

struct Value;
using ValueList = std::vector<Value>;

/// A literal runtime value: None, bool, number, string, or list.
struct Value {
  using Storage = std::variant<std::monostate, bool, double, std::string, ValueList>;
  Storage data;

  Value() = default;
  Value(bool b) : data(b) {}
  Value(double d) : data(d) {}
  Value(int i) : data(static_cast<double>(i)) {}
  Value(std::string s) : data(std::move(s)) {}
  Value(const char* s) : data(std::string(s)) {}
  Value(ValueList l) : data(std::move(l)) {}

  static Value none() { return Value(); }

  bool is_none() const { return std::holds_alternative<std::monostate>(data); }
  bool is_bool() const { return std::holds_alternative<bool>(data); }
  bool is_number() const { return std::holds_alternative<double>(data); }
  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_list() const { return std::holds_alternative<ValueList>(data); }

  const std::string& as_string() const { return std::get<std::string>(data); }
  double as_number() const { return std::get<double>(data); }
  bool as_bool() const { return std::get<bool>(data); }
  const ValueList& as_list() const { return std::get<ValueList>(data); }

  /// Python truthiness: None, false, 0, "" and [] are falsy.
  bool truthy() const;

  bool operator==(const Value&) const = default;
};

/// Python-style literal rendering: 'text', 3, 2.5, True, None, ['a', 'b'].
std::string to_literal(const Value& v);
std::string quote_string(std::string_view s);
std::string format_number(double d);

/// Element ids may be written as strings or as bare integers (click(757)).
std::optional<std::string> as_element_id(const Value& v);

/// One agent-level act: a primitive or a library skill call with literal args.
struct Action {
  std::string name;
  ValueList args;

  /// Canonical text, e.g. fill('757', 'satisfied').
  std::string to_string() const;

  bool operator==(const Action&) const = default;
};

}  // namespace webskill::dsl
