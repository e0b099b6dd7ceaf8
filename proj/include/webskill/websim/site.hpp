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

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "webskill/dsl/value.hpp"
#include "webskill/error.hpp"

namespace webskill::websim {

enum class Role { link, button, textbox, combobox, checkbox, statictext, image, option };
std::string_view to_string(Role r);
std::optional<Role> parse_role(std::string_view s);

struct ElementSpec {
  std::string bid;
  Role role = Role::statictext;
  std::string name;
  std::optional<std::string> value;
  std::vector<std::string> options;
  /// When set, the element renders the named flag as its value.
  std::optional<std::string> flag;
};

/// Fires when `action` is applied to `bid`. An empty bid matches page-level
/// actions (keyboard_press, scroll). `value` must equal the action's value
/// argument when present; "*" matches anything.
struct Trigger {
  std::string bid;
  std::string action;
  std::optional<std::string> value;
};

enum class EffectKind { go_to, set_value, set_flag, open_popup, close_popup, append_flag, emit_results };
std::string_view to_string(EffectKind k);

/// `target` is the url, bid, flag name, popup id or table depending on kind.
/// `value` is a template: "$bid" reads an element value, "@name" a flag,
/// anything else is literal.
struct Effect {
  EffectKind kind = EffectKind::go_to;
  std::string target;
  std::string value;
};

struct Rule {
  Trigger on;
  std::vector<Effect> effects;
};

struct RowClick {
  std::string set_flag;
  std::string from_field;
  std::string go_to;
};

/// Listing pages render one link per matching table row.
struct DynamicQuery {
  std::string table;
  std::string filter_field;
  std::string filter_term;  // template; an unset flag yields no rows
  bool exact = false;
  std::string sort_field;  // template naming a column, case-insensitive
  std::map<std::string, std::string> sort_aliases;  // widget label -> column
  bool descending = false;
  std::vector<std::string> label_fields;
  std::string bid_field;
  std::optional<RowClick> on_click;
};

struct PageSpec {
  std::string url;
  std::string title;
  std::vector<ElementSpec> elements;
  std::vector<Rule> rules;
  std::optional<DynamicQuery> dynamic_query;

  const ElementSpec* find_element(std::string_view bid) const;
};

struct PopupSpec {
  std::string id;
  std::string title;
  std::vector<ElementSpec> elements;
  std::vector<Rule> rules;

  const ElementSpec* find_element(std::string_view bid) const;
};

using Record = std::map<std::string, dsl::Value>;

struct SiteSpec {
  std::string site_id;
  std::string start_url;
  std::map<std::string, std::vector<Record>> data_tables;
  std::vector<PageSpec> pages;
  std::vector<PopupSpec> popups;

  const PageSpec* find_page(std::string_view url) const;
  const PopupSpec* find_popup(std::string_view id) const;
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : Error("SchemaError at " + path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class DanglingReference : public Error {
 public:
  using Error::Error;
};

/// Parses and cross-checks a site document (JSON, see docs/site-spec.md).
std::shared_ptr<const SiteSpec> load_site_spec(std::string_view document);
std::shared_ptr<const SiteSpec> load_site_file(const std::filesystem::path& path);

/// Canonical text of a record field: integral numbers without a fraction.
std::string field_text(const dsl::Value& v);

}  // namespace webskill::websim
