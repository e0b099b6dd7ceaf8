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

#include "webskill/dsl/primitives.hpp"

#include <algorithm>

namespace webskill::dsl {
namespace {

constexpr PrimitiveParam kNoop[] = {{"wait_ms", ParamType::number, true}};
constexpr PrimitiveParam kElem[] = {{"elem", ParamType::element}};
constexpr PrimitiveParam kFill[] = {{"elem", ParamType::element}, {"value", ParamType::text}};
constexpr PrimitiveParam kKey[] = {{"key_comb", ParamType::key}};
constexpr PrimitiveParam kScroll[] = {{"x", ParamType::number}, {"y", ParamType::number}};
constexpr PrimitiveParam kSelect[] = {{"elem", ParamType::element},
                                      {"options", ParamType::options}};
constexpr PrimitiveParam kUrl[] = {{"url", ParamType::url}};
constexpr PrimitiveParam kIndex[] = {{"index", ParamType::index}};
constexpr PrimitiveParam kText[] = {{"text", ParamType::text}};
constexpr PrimitiveParam kReason[] = {{"reason", ParamType::text}};

const std::array<PrimitiveSignature, kPrimitiveCount> kTable = {{
    {PrimitiveKind::noop, "noop", kNoop, "Do nothing for specified time."},
    {PrimitiveKind::click, "click", kElem, "Click at an element."},
    {PrimitiveKind::hover, "hover", kElem, "Hover on an element."},
    {PrimitiveKind::fill, "fill", kFill, "Type into an element."},
    {PrimitiveKind::keyboard_press, "keyboard_press", kKey, "Press a key combination."},
    {PrimitiveKind::scroll, "scroll", kScroll, "Scroll horizontally or vertically."},
    {PrimitiveKind::select_option, "select_option", kSelect, "Select one or multiple options."},
    {PrimitiveKind::goto_url, "goto", kUrl, "Navigate to a url."},
    {PrimitiveKind::go_back, "go_back", {}, "Navigate to the previous page."},
    {PrimitiveKind::go_forward, "go_forward", {}, "Navigate to the next page."},
    {PrimitiveKind::new_tab, "new_tab", {}, "Open a new tab."},
    {PrimitiveKind::tab_close, "tab_close", {}, "Close the current tab."},
    {PrimitiveKind::tab_focus, "tab_focus", kIndex, "Bring tab to front."},
    {PrimitiveKind::send_msg_to_user, "send_msg_to_user", kText, "Send a message to the user."},
    {PrimitiveKind::report_infeasible, "report_infeasible", kReason,
     "Notify user that instructions are infeasible."},
}};

}  // namespace

std::size_t PrimitiveSignature::min_arity() const {
  return static_cast<std::size_t>(
      std::count_if(params.begin(), params.end(), [](const auto& p) { return !p.optional; }));
}

std::string PrimitiveSignature::signature_text() const {
  std::string out(name);
  out += '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += params[i].name;
  }
  return out + ')';
}

const std::array<PrimitiveSignature, kPrimitiveCount>& primitive_table() { return kTable; }

const PrimitiveSignature& signature_of(PrimitiveKind kind) {
  return kTable[static_cast<std::size_t>(kind)];
}

std::optional<PrimitiveKind> find_primitive(std::string_view name) {
  for (const auto& sig : kTable) {
    if (sig.name == name) return sig.kind;
  }
  return std::nullopt;
}

std::string_view primitive_name(PrimitiveKind kind) { return signature_of(kind).name; }

bool is_terminating(PrimitiveKind kind) {
  return kind == PrimitiveKind::send_msg_to_user || kind == PrimitiveKind::report_infeasible;
}

std::optional<PredicateSignature> find_predicate(std::string_view name) {
  static constexpr PredicateSignature kPredicates[] = {
      {"has_popup_window", 0}, {"element_exists", 1}, {"text_present", 1}};
  for (const auto& p : kPredicates) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace webskill::dsl
