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

#include "webskill/websim/engine.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "webskill/dsl/primitives.hpp"

namespace webskill::websim {

using dsl::Action;
using dsl::PrimitiveKind;
using dsl::StepErrorKind;
using dsl::StepOutcome;
using dsl::Value;

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct Located {
  const ElementSpec* spec = nullptr;
  const Record* row = nullptr;
  bool in_popup = false;
};

struct LookupFailure {
  StepErrorKind kind;
  std::string message;
};

const PageSpec* current_page(const EnvState& s, const SiteSpec& site) {
  return site.find_page(s.current_url());
}

const PopupSpec* open_popup(const EnvState& s, const SiteSpec& site) {
  return s.popup ? site.find_popup(*s.popup) : nullptr;
}

const Record* find_row(const EnvState& s, const SiteSpec& site, const PageSpec& page,
                       std::string_view bid) {
  if (!page.dynamic_query) return nullptr;
  for (const Record* r : query_rows(s, site, *page.dynamic_query)) {
    auto it = r->find(page.dynamic_query->bid_field);
    if (it != r->end() && field_text(it->second) == bid) return r;
  }
  return nullptr;
}

std::variant<Located, LookupFailure> locate(const EnvState& s, const SiteSpec& site,
                                            std::string_view bid) {
  const PageSpec* page = current_page(s, site);
  bool on_page = false;
  Located loc;
  if (page) {
    if ((loc.spec = page->find_element(bid))) {
      on_page = true;
    } else if ((loc.row = find_row(s, site, *page, bid))) {
      on_page = true;
    }
  }
  if (const PopupSpec* popup = open_popup(s, site)) {
    if (const ElementSpec* e = popup->find_element(bid)) return Located{e, nullptr, true};
    if (on_page) {
      return LookupFailure{StepErrorKind::element_obscured,
                           "element " + std::string(bid) + " is covered by dialog '" + popup->id + "'"};
    }
  }
  if (on_page) return loc;
  return LookupFailure{StepErrorKind::unknown_element,
                       "no element with bid " + std::string(bid) + " on " + s.current_url()};
}

std::optional<std::string> resolve(const EnvState& s, const SiteSpec& site, const std::string& tmpl) {
  if (tmpl.size() > 1 && tmpl[0] == '$') {
    std::string bid = tmpl.substr(1);
    if (const PageSpec* page = current_page(s, site)) {
      if (const ElementSpec* e = page->find_element(bid)) return element_value(s, *e);
    }
    if (const PopupSpec* popup = open_popup(s, site)) {
      if (const ElementSpec* e = popup->find_element(bid)) return element_value(s, *e);
    }
    auto it = s.overrides.find(bid);
    return it == s.overrides.end() ? std::string() : it->second;
  }
  if (tmpl.size() > 1 && tmpl[0] == '@') {
    const FlagValue* f = s.flag(tmpl.substr(1));
    if (!f) return std::nullopt;
    return flag_text(*f);
  }
  return tmpl;
}

void navigate(EnvState& s, const std::string& url) {
  Tab& tab = s.tabs[s.focused];
  tab.back.push_back(tab.url);
  tab.forward.clear();
  tab.url = url;
  s.popup.reset();
  s.url_log.push_back(url);
}

void apply(EnvState& s, const SiteSpec& site, const Effect& e) {
  switch (e.kind) {
    case EffectKind::go_to:
      navigate(s, e.target);
      break;
    case EffectKind::set_value:
      s.overrides[e.target] = resolve(s, site, e.value).value_or("");
      break;
    case EffectKind::set_flag:
      s.flags[e.target] = resolve(s, site, e.value).value_or("");
      break;
    case EffectKind::append_flag: {
      std::string v = resolve(s, site, e.value).value_or("");
      auto it = s.flags.find(e.target);
      if (it == s.flags.end()) {
        s.flags[e.target] = std::vector<std::string>{v};
      } else if (auto* list = std::get_if<std::vector<std::string>>(&it->second)) {
        list->push_back(v);
      } else {
        std::vector<std::string> items;
        if (!std::get<std::string>(it->second).empty()) items.push_back(std::get<std::string>(it->second));
        items.push_back(v);
        it->second = std::move(items);
      }
      break;
    }
    case EffectKind::open_popup:
      s.popup = e.target;
      break;
    case EffectKind::close_popup:
      s.popup.reset();
      break;
    case EffectKind::emit_results:
      s.flags["results." + e.target] = resolve(s, site, e.value).value_or("");
      break;
  }
}

const Rule* match_rule(const std::vector<Rule>& rules, std::string_view bid, std::string_view action,
                       const std::optional<std::string>& value) {
  for (const auto& r : rules) {
    if (r.on.bid != bid || r.on.action != action) continue;
    if (r.on.value && *r.on.value != "*" && (!value || *value != *r.on.value)) continue;
    return &r;
  }
  return nullptr;
}

const std::vector<Rule>* rules_for(const EnvState& s, const SiteSpec& site, bool in_popup) {
  if (in_popup) {
    if (const PopupSpec* p = open_popup(s, site)) return &p->rules;
    return nullptr;
  }
  if (const PageSpec* page = current_page(s, site)) return &page->rules;
  return nullptr;
}

std::optional<std::string> text_arg(const Value& v) {
  if (v.is_string()) return v.as_string();
  if (v.is_number()) return dsl::format_number(v.as_number());
  return std::nullopt;
}

std::optional<long long> integral_arg(const Value& v) {
  if (!v.is_number()) return std::nullopt;
  double d = v.as_number();
  if (std::floor(d) != d) return std::nullopt;
  return static_cast<long long>(d);
}

class StepError {
 public:
  StepError(StepErrorKind k, std::string m) : kind(k), message(std::move(m)) {}
  StepErrorKind kind;
  std::string message;
};

void invalid(const std::string& message) { throw StepError(StepErrorKind::invalid_argument, message); }

Located require_element(const EnvState& s, const SiteSpec& site, const Value& arg) {
  auto bid = dsl::as_element_id(arg);
  if (!bid) invalid("element id must be a string or integer");
  auto found = locate(s, site, *bid);
  if (auto* f = std::get_if<LookupFailure>(&found)) throw StepError(f->kind, f->message);
  return std::get<Located>(found);
}

std::string bid_of(const Located& loc, const PageSpec* page) {
  if (loc.spec) return loc.spec->bid;
  return field_text(loc.row->at(page->dynamic_query->bid_field));
}

// Applies the matching rule, if any. Returns false when nothing fired.
bool fire(EnvState& s, const SiteSpec& site, bool in_popup, std::string_view bid,
          std::string_view action, const std::optional<std::string>& value) {
  const auto* rules = rules_for(s, site, in_popup);
  if (!rules) return false;
  const Rule* r = match_rule(*rules, bid, action, value);
  if (!r) return false;
  for (const auto& e : r->effects) apply(s, site, e);
  return true;
}

void click(EnvState& s, const SiteSpec& site, const Located& loc) {
  const PageSpec* page = current_page(s, site);
  if (loc.row) {
    const auto& q = *page->dynamic_query;
    if (q.on_click) {
      auto it = loc.row->find(q.on_click->from_field);
      s.flags[q.on_click->set_flag] = it == loc.row->end() ? std::string() : field_text(it->second);
      navigate(s, q.on_click->go_to);
    }
    return;
  }
  if (fire(s, site, loc.in_popup, loc.spec->bid, "click", std::nullopt)) return;
  if (loc.spec->role == Role::checkbox) {
    std::string current = element_value(s, *loc.spec);
    s.overrides[loc.spec->bid] = current == "checked" ? "unchecked" : "checked";
  }
}

void run_action(EnvState& s, const SiteSpec& site, const Action& action) {
  auto kind = dsl::find_primitive(action.name);
  if (!kind) throw StepError(StepErrorKind::unknown_action, "unknown action " + action.name);
  const auto& sig = dsl::signature_of(*kind);
  const auto& args = action.args;
  if (args.size() < sig.min_arity() || args.size() > sig.max_arity()) {
    invalid(action.name + " expects " + sig.signature_text());
  }

  switch (*kind) {
    case PrimitiveKind::noop:
      if (!args.empty() && !args[0].is_number()) invalid("wait_ms must be a number");
      return;
    case PrimitiveKind::click:
      click(s, site, require_element(s, site, args[0]));
      return;
    case PrimitiveKind::hover: {
      Located loc = require_element(s, site, args[0]);
      fire(s, site, loc.in_popup, bid_of(loc, current_page(s, site)), "hover", std::nullopt);
      return;
    }
    case PrimitiveKind::fill: {
      Located loc = require_element(s, site, args[0]);
      auto text = text_arg(args[1]);
      if (!text) invalid("fill value must be text");
      if (!loc.spec || loc.spec->role != Role::textbox) invalid("fill target is not a textbox");
      s.overrides[loc.spec->bid] = *text;
      fire(s, site, loc.in_popup, loc.spec->bid, "fill", text);
      return;
    }
    case PrimitiveKind::select_option: {
      Located loc = require_element(s, site, args[0]);
      if (!loc.spec || loc.spec->role != Role::combobox) invalid("select_option target is not a combobox");
      std::vector<std::string> chosen;
      if (auto t = text_arg(args[1])) {
        chosen.push_back(*t);
      } else if (args[1].is_list() && !args[1].as_list().empty()) {
        for (const auto& v : args[1].as_list()) {
          auto t2 = text_arg(v);
          if (!t2) invalid("options must be text");
          chosen.push_back(*t2);
        }
      } else {
        invalid("options must be text or a list of text");
      }
      const auto& opts = loc.spec->options;
      for (const auto& c : chosen) {
        if (std::find(opts.begin(), opts.end(), c) == opts.end()) {
          invalid("'" + c + "' is not an option of " + loc.spec->bid);
        }
      }
      std::string joined = flag_text(chosen.size() == 1 ? FlagValue(chosen[0]) : FlagValue(chosen));
      s.overrides[loc.spec->bid] = joined;
      fire(s, site, loc.in_popup, loc.spec->bid, "select_option", joined);
      return;
    }
    case PrimitiveKind::keyboard_press: {
      auto key = text_arg(args[0]);
      if (!key || !args[0].is_string()) invalid("key must be text");
      if (s.popup && fire(s, site, true, "", "keyboard_press", key)) return;
      if (!s.popup) fire(s, site, false, "", "keyboard_press", key);
      return;
    }
    case PrimitiveKind::scroll:
      if (!args[0].is_number() || !args[1].is_number()) invalid("scroll deltas must be numbers");
      fire(s, site, s.popup.has_value(), "", "scroll", std::nullopt);
      return;
    case PrimitiveKind::goto_url: {
      if (!args[0].is_string()) invalid("url must be text");
      const std::string& url = args[0].as_string();
      if (url != kBlankUrl && !site.find_page(url)) {
        throw StepError(StepErrorKind::navigation_error, "no page at " + url);
      }
      navigate(s, url);
      return;
    }
    case PrimitiveKind::go_back:
    case PrimitiveKind::go_forward: {
      Tab& tab = s.tabs[s.focused];
      auto& from = *kind == PrimitiveKind::go_back ? tab.back : tab.forward;
      auto& to = *kind == PrimitiveKind::go_back ? tab.forward : tab.back;
      if (from.empty()) return;
      to.push_back(tab.url);
      tab.url = from.back();
      from.pop_back();
      s.popup.reset();
      s.url_log.push_back(tab.url);
      return;
    }
    case PrimitiveKind::new_tab:
      s.tabs.push_back(Tab{std::string(kBlankUrl), {}, {}});
      s.focused = s.tabs.size() - 1;
      s.popup.reset();
      s.url_log.push_back(std::string(kBlankUrl));
      return;
    case PrimitiveKind::tab_close:
      if (s.tabs.size() == 1) invalid("cannot close the last tab");
      s.tabs.erase(s.tabs.begin() + static_cast<std::ptrdiff_t>(s.focused));
      s.focused = std::min(s.focused, s.tabs.size() - 1);
      s.popup.reset();
      s.url_log.push_back(s.current_url());
      return;
    case PrimitiveKind::tab_focus: {
      auto index = integral_arg(args[0]);
      if (!index || *index < 0 || static_cast<std::size_t>(*index) >= s.tabs.size()) {
        invalid("tab index out of range");
      }
      if (static_cast<std::size_t>(*index) == s.focused) return;
      s.focused = static_cast<std::size_t>(*index);
      s.popup.reset();
      s.url_log.push_back(s.current_url());
      return;
    }
    case PrimitiveKind::send_msg_to_user:
    case PrimitiveKind::report_infeasible: {
      auto text = text_arg(args[0]);
      if (!text) invalid("message must be text");
      s.message_log.push_back(*text);
      return;
    }
  }
}

void render_element(std::string& out, const EnvState& s, const ElementSpec& e, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += "[" + e.bid + "] " + std::string(to_string(e.role)) + " " + dsl::quote_string(e.name);
  bool show_value = s.overrides.count(e.bid) || e.value || (e.flag && s.flag(*e.flag));
  if (show_value) out += " value=" + dsl::quote_string(element_value(s, e));
  if (e.role == Role::combobox) {
    out += " options=[";
    for (std::size_t i = 0; i < e.options.size(); ++i) {
      if (i) out += ", ";
      out += dsl::quote_string(e.options[i]);
    }
    out += "]";
  }
  out += "\n";
}

}  // namespace

std::string element_value(const EnvState& state, const ElementSpec& e) {
  if (auto it = state.overrides.find(e.bid); it != state.overrides.end()) return it->second;
  if (e.flag) {
    if (const FlagValue* f = state.flag(*e.flag)) return flag_text(*f);
  }
  if (e.value) return *e.value;
  if (e.role == Role::combobox && !e.options.empty()) return e.options.front();
  return "";
}

EnvState reset(const SiteSpec& site) {
  EnvState s;
  s.tabs.push_back(Tab{site.start_url, {}, {}});
  s.url_log.push_back(site.start_url);
  return s;
}

EnvState reset_at(const SiteSpec& site, const std::string& url) {
  EnvState s = reset(site);
  s.tabs[0].url = url;
  s.url_log = {url};
  return s;
}

std::vector<const Record*> query_rows(const EnvState& state, const SiteSpec& site, const DynamicQuery& q) {
  std::vector<const Record*> rows;
  auto table = site.data_tables.find(q.table);
  if (table == site.data_tables.end()) return rows;
  std::optional<std::string> term;
  if (!q.filter_field.empty()) {
    term = resolve(state, site, q.filter_term);
    if (!term) return rows;
  }
  std::string needle = term ? lower(*term) : "";
  for (const auto& r : table->second) {
    if (term) {
      auto it = r.find(q.filter_field);
      if (it == r.end()) continue;
      std::string hay = field_text(it->second);
      if (q.exact ? hay != *term : lower(hay).find(needle) == std::string::npos) continue;
    }
    rows.push_back(&r);
  }
  if (!q.sort_field.empty()) {
    std::string label = resolve(state, site, q.sort_field).value_or("");
    auto alias = q.sort_aliases.find(label);
    std::string field = lower(alias == q.sort_aliases.end() ? label : alias->second);
    bool known = std::any_of(rows.begin(), rows.end(), [&](const Record* r) { return r->count(field); });
    if (known) {
      auto less = [&](const Record* a, const Record* b) {
        auto ia = a->find(field), ib = b->find(field);
        if (ia == a->end() || ib == b->end()) return ia != a->end() && ib == b->end();
        if (ia->second.is_number() && ib->second.is_number()) {
          return q.descending ? ia->second.as_number() > ib->second.as_number()
                              : ia->second.as_number() < ib->second.as_number();
        }
        return q.descending ? field_text(ia->second) > field_text(ib->second)
                            : field_text(ia->second) < field_text(ib->second);
      };
      std::stable_sort(rows.begin(), rows.end(), less);
    }
  }
  return rows;
}

dsl::StepOutcome step(EnvState& state, const SiteSpec& site, const Action& action) {
  EnvState next = state;
  next.step_error.reset();
  try {
    run_action(next, site, action);
  } catch (const StepError& e) {
    state.step_error = dsl::StepError{e.kind, e.message};
    return StepOutcome::failure(e.kind, e.message);
  }
  state.step_error.reset();
  bool changed = !(next == state);
  state = std::move(next);
  return changed ? StepOutcome::ok() : StepOutcome::no_effect();
}

Observation observe(const EnvState& state, const SiteSpec& site) {
  Observation obs;
  obs.url = state.current_url();
  const PageSpec* page = current_page(state, site);
  std::string& out = obs.text;
  out = "RootWebArea " + dsl::quote_string(page ? page->title : "") + "\n";
  if (page) {
    for (const auto& e : page->elements) render_element(out, state, e, 1);
    if (page->dynamic_query) {
      const auto& q = *page->dynamic_query;
      for (const Record* r : query_rows(state, site, q)) {
        std::string label;
        for (const auto& f : q.label_fields) {
          auto it = r->find(f);
          if (it == r->end()) continue;
          if (!label.empty()) label += " | ";
          label += field_text(it->second);
        }
        out += "  [" + field_text(r->at(q.bid_field)) + "] link " + dsl::quote_string(label) + "\n";
      }
    }
  }
  if (const PopupSpec* popup = open_popup(state, site)) {
    out += "  dialog " + dsl::quote_string(popup->title) + "\n";
    for (const auto& e : popup->elements) render_element(out, state, e, 2);
  }
  return obs;
}

bool eval_predicate(const EnvState& state, const SiteSpec& site, std::string_view name,
                    std::span<const dsl::Value> args) {
  auto sig = dsl::find_predicate(name);
  if (!sig) throw Error("UnknownPredicate: " + std::string(name));
  if (args.size() != sig->arity) throw Error("InvalidArgument: " + std::string(name) + " arity");
  if (name == "has_popup_window") return state.popup.has_value();
  if (name == "element_exists") {
    auto bid = dsl::as_element_id(args[0]);
    if (!bid) return false;
    auto found = locate(state, site, *bid);
    if (auto* f = std::get_if<LookupFailure>(&found)) return f->kind == StepErrorKind::element_obscured;
    return true;
  }
  auto needle = text_arg(args[0]);
  if (!needle) return false;
  return observe(state, site).text.find(*needle) != std::string::npos;
}

WebEnvironment::WebEnvironment(std::shared_ptr<const SiteSpec> site)
    : site_(std::move(site)), state_(websim::reset(*site_)) {}

dsl::StepOutcome WebEnvironment::step(const Action& action) { return websim::step(state_, *site_, action); }

dsl::Fingerprint WebEnvironment::fingerprint() const { return websim::fingerprint(state_); }

bool WebEnvironment::eval_predicate(std::string_view name, std::span<const dsl::Value> args) const {
  return websim::eval_predicate(state_, *site_, name, args);
}

void WebEnvironment::reset() { state_ = websim::reset(*site_); }

Observation WebEnvironment::observe() const { return websim::observe(state_, *site_); }

}  // namespace webskill::websim
