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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace webskill::dsl {

/// The fixed initial action space of the browsing agent.
enum class PrimitiveKind {
  noop,
  click,
  hover,
  fill,
  keyboard_press,
  scroll,
  select_option,
  goto_url,
  go_back,
  go_forward,
  new_tab,
  tab_close,
  tab_focus,
  send_msg_to_user,
  report_infeasible,
};

inline constexpr std::size_t kPrimitiveCount = 15;

/// Semantic type of a primitive parameter; checked when the action runs.
enum class ParamType { element, text, number, key, url, index, options };

struct PrimitiveParam {
  std::string_view name;
  ParamType type;
  bool optional = false;
};

struct PrimitiveSignature {
  PrimitiveKind kind;
  std::string_view name;
  std::span<const PrimitiveParam> params;
  std::string_view description;

  std::size_t min_arity() const;
  std::size_t max_arity() const { return params.size(); }
  /// e.g. "fill(elem, value)".
  std::string signature_text() const;
};

const std::array<PrimitiveSignature, kPrimitiveCount>& primitive_table();
const PrimitiveSignature& signature_of(PrimitiveKind kind);
std::optional<PrimitiveKind> find_primitive(std::string_view name);
std::string_view primitive_name(PrimitiveKind kind);

/// True for send_msg_to_user and report_infeasible.
bool is_terminating(PrimitiveKind kind);

/// Predicates usable in skill conditions.
struct PredicateSignature {
  std::string_view name;
  std::size_t arity;
};
std::optional<PredicateSignature> find_predicate(std::string_view name);

}  // namespace webskill::dsl
