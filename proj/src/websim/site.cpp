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

#include "webskill/websim/site.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "webskill/dsl/primitives.hpp"

namespace webskill::websim {

using nlohmann::json;

namespace {

constexpr std::string_view kRoleNames[] = {"link",     "button",     "textbox", "combobox",
                                           "checkbox", "statictext", "image",   "option"};

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing required field");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

std::string optional_string(const json& obj, const char* key, const std::string& path,
                            std::string fallback = {}) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_string()) throw SchemaError(path + "." + key, "expected a string");
  return it->get<std::string>();
}

// Element ids are usually numeric in real trees; accept both spellings.
std::string bid_of(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw SchemaError(path, "expected a string or integer element id");
}

std::vector<std::string> string_list(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

ElementSpec parse_element(const json& j, const std::string& path) {
  ElementSpec e;
  e.bid = bid_of(require(j, "bid", path), path + ".bid");
  std::string role = require_string(j, "role", path);
  auto r = parse_role(role);
  if (!r) throw SchemaError(path + ".role", "unknown role '" + role + "'");
  e.role = *r;
  e.name = optional_string(j, "name", path);
  if (j.contains("value")) e.value = require_string(j, "value", path);
  if (j.contains("options")) e.options = string_list(j["options"], path + ".options");
  if (j.contains("flag")) e.flag = require_string(j, "flag", path);
  if (e.role == Role::combobox && e.options.empty()) {
    throw SchemaError(path + ".options", "combobox needs at least one option");
  }
  return e;
}

Effect parse_effect(const json& j, const std::string& path) {
  if (!j.is_object() || j.size() != 1) throw SchemaError(path, "effect must have exactly one key");
  const auto& [key, body] = *j.items().begin();
  std::string p = path + "." + key;
  Effect e;
  if (key == "goto") {
    e.kind = EffectKind::go_to;
    if (!body.is_string()) throw SchemaError(p, "expected a url");
    e.target = body.get<std::string>();
  } else if (key == "set_value") {
    e.kind = EffectKind::set_value;
    e.target = bid_of(require(body, "bid", p), p + ".bid");
    e.value = require_string(body, "value", p);
  } else if (key == "set_flag" || key == "append_flag") {
    e.kind = key == "set_flag" ? EffectKind::set_flag : EffectKind::append_flag;
    e.target = require_string(body, "name", p);
    e.value = require_string(body, "value", p);
  } else if (key == "open_popup") {
    e.kind = EffectKind::open_popup;
    if (!body.is_string()) throw SchemaError(p, "expected a popup id");
    e.target = body.get<std::string>();
  } else if (key == "close_popup") {
    e.kind = EffectKind::close_popup;
  } else if (key == "emit_results") {
    e.kind = EffectKind::emit_results;
    e.target = require_string(body, "table", p);
    e.value = require_string(body, "term", p);
  } else {
    throw SchemaError(p, "unknown effect");
  }
  return e;
}

Rule parse_rule(const json& j, const std::string& path) {
  Rule r;
  const json& on = require(j, "on", path);
  if (on.contains("bid")) r.on.bid = bid_of(on["bid"], path + ".on.bid");
  r.on.action = require_string(on, "action", path + ".on");
  if (!dsl::find_primitive(r.on.action)) {
    throw SchemaError(path + ".on.action", "unknown action '" + r.on.action + "'");
  }
  if (on.contains("value")) r.on.value = require_string(on, "value", path + ".on");
  const json& effects = require(j, "do", path);
  if (!effects.is_array() || effects.empty()) throw SchemaError(path + ".do", "need at least one effect");
  for (std::size_t i = 0; i < effects.size(); ++i) {
    r.effects.push_back(parse_effect(effects[i], path + ".do[" + std::to_string(i) + "]"));
  }
  return r;
}

DynamicQuery parse_query(const json& j, const std::string& path) {
  DynamicQuery q;
  q.table = require_string(j, "table", path);
  q.filter_field = optional_string(j, "filter_field", path);
  q.filter_term = optional_string(j, "filter_term", path);
  std::string match = optional_string(j, "match", path, "substring");
  if (match != "substring" && match != "exact") throw SchemaError(path + ".match", "expected substring or exact");
  q.exact = match == "exact";
  q.sort_field = optional_string(j, "sort_field", path);
  if (j.contains("sort_aliases")) {
    const json& a = j["sort_aliases"];
    if (!a.is_object()) throw SchemaError(path + ".sort_aliases", "expected an object");
    for (const auto& [label, column] : a.items()) {
      if (!column.is_string()) throw SchemaError(path + ".sort_aliases." + label, "expected a string");
      q.sort_aliases[label] = column.get<std::string>();
    }
  }
  if (j.contains("descending")) {
    if (!j["descending"].is_boolean()) throw SchemaError(path + ".descending", "expected a boolean");
    q.descending = j["descending"].get<bool>();
  }
  q.label_fields = string_list(require(j, "label_fields", path), path + ".label_fields");
  q.bid_field = require_string(j, "bid_field", path);
  if (j.contains("on_click")) {
    const json& c = j["on_click"];
    std::string p = path + ".on_click";
    q.on_click = RowClick{require_string(c, "set_flag", p), require_string(c, "from_field", p),
                          require_string(c, "goto", p)};
  }
  return q;
}

template <class Container>
void parse_elements_and_rules(const json& j, const std::string& path, Container& out) {
  if (j.contains("elements")) {
    const json& els = j["elements"];
    if (!els.is_array()) throw SchemaError(path + ".elements", "expected an array");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < els.size(); ++i) {
      std::string p = path + ".elements[" + std::to_string(i) + "]";
      auto e = parse_element(els[i], p);
      if (!seen.insert(e.bid).second) throw SchemaError(p + ".bid", "duplicate bid '" + e.bid + "'");
      out.elements.push_back(std::move(e));
    }
  }
  if (j.contains("rules")) {
    const json& rules = j["rules"];
    if (!rules.is_array()) throw SchemaError(path + ".rules", "expected an array");
    for (std::size_t i = 0; i < rules.size(); ++i) {
      out.rules.push_back(parse_rule(rules[i], path + ".rules[" + std::to_string(i) + "]"));
    }
  }
}

dsl::Value field_value(const json& v, const std::string& path) {
  if (v.is_string()) return dsl::Value(v.get<std::string>());
  if (v.is_number()) return dsl::Value(v.get<double>());
  if (v.is_boolean()) return dsl::Value(v.get<bool>());
  throw SchemaError(path, "record fields must be flat scalars");
}

void check_effect_refs(const SiteSpec& site, const Effect& e, const std::string& where) {
  switch (e.kind) {
    case EffectKind::go_to:
      if (!site.find_page(e.target)) throw DanglingReference(where + ": goto target '" + e.target + "' does not exist");
      break;
    case EffectKind::open_popup:
      if (!site.find_popup(e.target)) throw DanglingReference(where + ": popup '" + e.target + "' does not exist");
      break;
    case EffectKind::emit_results:
      if (!site.data_tables.count(e.target)) throw DanglingReference(where + ": table '" + e.target + "' does not exist");
      break;
    default:
      break;
  }
}

template <class Container>
void check_rules(const SiteSpec& site, const Container& c, const std::string& where) {
  for (std::size_t i = 0; i < c.rules.size(); ++i) {
    const Rule& r = c.rules[i];
    std::string w = where + " rule " + std::to_string(i);
    if (!r.on.bid.empty() && !c.find_element(r.on.bid)) {
      throw DanglingReference(w + ": trigger bid '" + r.on.bid + "' is not on the page");
    }
    for (const auto& e : r.effects) check_effect_refs(site, e, w);
  }
}

void cross_check(const SiteSpec& site) {
  if (!site.find_page(site.start_url)) throw DanglingReference("start_url '" + site.start_url + "' does not exist");
  for (const auto& page : site.pages) {
    check_rules(site, page, "page " + page.url);
    if (!page.dynamic_query) continue;
    const auto& q = *page.dynamic_query;
    auto table = site.data_tables.find(q.table);
    if (table == site.data_tables.end()) {
      throw DanglingReference("page " + page.url + ": query table '" + q.table + "' does not exist");
    }
    if (q.on_click && !site.find_page(q.on_click->go_to)) {
      throw DanglingReference("page " + page.url + ": row target '" + q.on_click->go_to + "' does not exist");
    }
    for (const auto& row : table->second) {
      auto it = row.find(q.bid_field);
      if (it == row.end()) {
        throw DanglingReference("table " + q.table + ": row without bid field '" + q.bid_field + "'");
      }
      if (page.find_element(field_text(it->second))) {
        throw DanglingReference("page " + page.url + ": row bid '" + field_text(it->second) +
                                "' collides with a static element");
      }
    }
  }
  for (const auto& popup : site.popups) check_rules(site, popup, "popup " + popup.id);
}

}  // namespace

std::string_view to_string(Role r) { return kRoleNames[static_cast<int>(r)]; }

std::optional<Role> parse_role(std::string_view s) {
  for (int i = 0; i < 8; ++i) {
    if (kRoleNames[i] == s) return static_cast<Role>(i);
  }
  return std::nullopt;
}

std::string_view to_string(EffectKind k) {
  static constexpr std::string_view kNames[] = {"goto",        "set_value", "set_flag",    "open_popup",
                                                "close_popup", "append_flag", "emit_results"};
  return kNames[static_cast<int>(k)];
}

const ElementSpec* PageSpec::find_element(std::string_view bid) const {
  for (const auto& e : elements) {
    if (e.bid == bid) return &e;
  }
  return nullptr;
}

const ElementSpec* PopupSpec::find_element(std::string_view bid) const {
  for (const auto& e : elements) {
    if (e.bid == bid) return &e;
  }
  return nullptr;
}

const PageSpec* SiteSpec::find_page(std::string_view url) const {
  for (const auto& p : pages) {
    if (p.url == url) return &p;
  }
  return nullptr;
}

const PopupSpec* SiteSpec::find_popup(std::string_view id) const {
  for (const auto& p : popups) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

std::string field_text(const dsl::Value& v) {
  if (v.is_string()) return v.as_string();
  if (v.is_number()) return dsl::format_number(v.as_number());
  return dsl::to_literal(v);
}

std::shared_ptr<const SiteSpec> load_site_spec(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", e.what());
  }
  auto site = std::make_shared<SiteSpec>();
  site->site_id = require_string(doc, "site_id", "$");
  site->start_url = require_string(doc, "start_url", "$");

  if (doc.contains("data_tables")) {
    const json& tables = doc["data_tables"];
    if (!tables.is_object()) throw SchemaError("$.data_tables", "expected an object");
    for (const auto& [name, rows] : tables.items()) {
      std::string p = "$.data_tables." + name;
      if (!rows.is_array()) throw SchemaError(p, "expected an array of records");
      auto& out = site->data_tables[name];
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string rp = p + "[" + std::to_string(i) + "]";
        if (!rows[i].is_object()) throw SchemaError(rp, "expected an object");
        Record rec;
        for (const auto& [k, v] : rows[i].items()) rec[k] = field_value(v, rp + "." + k);
        out.push_back(std::move(rec));
      }
    }
  }

  const json& pages = require(doc, "pages", "$");
  if (!pages.is_array() || pages.empty()) throw SchemaError("$.pages", "need at least one page");
  std::set<std::string> urls;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    std::string p = "$.pages[" + std::to_string(i) + "]";
    PageSpec page;
    page.url = require_string(pages[i], "url", p);
    page.title = optional_string(pages[i], "title", p);
    if (page.url == "about:blank") throw SchemaError(p + ".url", "about:blank is reserved");
    if (!urls.insert(page.url).second) throw SchemaError(p + ".url", "duplicate url '" + page.url + "'");
    parse_elements_and_rules(pages[i], p, page);
    if (pages[i].contains("dynamic_query")) page.dynamic_query = parse_query(pages[i]["dynamic_query"], p + ".dynamic_query");
    site->pages.push_back(std::move(page));
  }

  if (doc.contains("popups")) {
    const json& popups = doc["popups"];
    if (!popups.is_array()) throw SchemaError("$.popups", "expected an array");
    for (std::size_t i = 0; i < popups.size(); ++i) {
      std::string p = "$.popups[" + std::to_string(i) + "]";
      PopupSpec popup;
      popup.id = require_string(popups[i], "id", p);
      popup.title = optional_string(popups[i], "title", p);
      parse_elements_and_rules(popups[i], p, popup);
      site->popups.push_back(std::move(popup));
    }
  }

  cross_check(*site);
  return site;
}

std::shared_ptr<const SiteSpec> load_site_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open site file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return load_site_spec(ss.str());
}

}  // namespace webskill::websim
