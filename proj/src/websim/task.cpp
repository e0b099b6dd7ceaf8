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

#include "webskill/websim/task.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "webskill/websim/site.hpp"

namespace webskill::websim {

using nlohmann::json;

namespace {

constexpr std::string_view kKindNames[] = {"message_contains", "url_visited", "element_value_equals",
                                           "flag_equals", "flag_list_contains"};

std::string str(const json& obj, const char* key, const std::string& path, bool required = true) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) throw SchemaError(path + "." + key, "missing required field");
    return "";
  }
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  if (!it->is_string()) throw SchemaError(path + "." + key, "expected a string");
  return it->get<std::string>();
}

CheckpointSpec parse_checkpoint(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  CheckpointSpec c;
  c.id = str(j, "id", path);
  std::string kind = str(j, "kind", path);
  bool found = false;
  for (int i = 0; i < 5; ++i) {
    if (kKindNames[i] == kind) {
      c.kind = static_cast<CheckpointKind>(i);
      found = true;
    }
  }
  if (!found) throw SchemaError(path + ".kind", "unknown checkpoint kind '" + kind + "'");
  if (j.contains("weight")) {
    if (!j["weight"].is_number() || j["weight"].get<double>() <= 0) {
      throw SchemaError(path + ".weight", "expected a positive number");
    }
    c.weight = j["weight"].get<double>();
  }
  switch (c.kind) {
    case CheckpointKind::message_contains: {
      auto it = j.find("substrings");
      if (it == j.end() || !it->is_array() || it->empty()) {
        throw SchemaError(path + ".substrings", "expected a non-empty array");
      }
      for (const auto& s : *it) {
        if (!s.is_string()) throw SchemaError(path + ".substrings", "expected strings");
        c.substrings.push_back(s.get<std::string>());
      }
      std::string mode = str(j, "mode", path, false);
      if (!mode.empty() && mode != "all" && mode != "any") throw SchemaError(path + ".mode", "expected all or any");
      c.require_all = mode != "any";
      break;
    }
    case CheckpointKind::url_visited:
      c.url = str(j, "url", path);
      break;
    case CheckpointKind::element_value_equals:
      c.page = str(j, "page", path);
      c.bid = str(j, "bid", path);
      c.value = str(j, "value", path);
      break;
    case CheckpointKind::flag_equals:
    case CheckpointKind::flag_list_contains:
      c.name = str(j, "name", path);
      c.value = str(j, "value", path);
      break;
  }
  return c;
}

}  // namespace

std::string_view to_string(CheckpointKind k) { return kKindNames[static_cast<int>(k)]; }

std::vector<Task> load_tasks(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", e.what());
  }
  if (!doc.is_array()) throw SchemaError("$", "task file must be an array");
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    std::string p = "$[" + std::to_string(i) + "]";
    const json& j = doc[i];
    if (!j.is_object()) throw SchemaError(p, "expected an object");
    Task t;
    t.task_id = str(j, "task_id", p);
    t.site_id = str(j, "site_id", p);
    t.query = str(j, "query", p);
    if (j.contains("max_steps")) {
      if (!j["max_steps"].is_number_integer() || j["max_steps"].get<int>() < 1) {
        throw SchemaError(p + ".max_steps", "expected a positive integer");
      }
      t.max_steps = j["max_steps"].get<int>();
    }
    if (j.contains("checkpoints")) {
      if (!j["checkpoints"].is_array()) throw SchemaError(p + ".checkpoints", "expected an array");
      for (std::size_t k = 0; k < j["checkpoints"].size(); ++k) {
        t.checkpoints.push_back(
            parse_checkpoint(j["checkpoints"][k], p + ".checkpoints[" + std::to_string(k) + "]"));
      }
    }
    tasks.push_back(std::move(t));
  }
  return tasks;
}

std::vector<Task> load_task_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open task file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return load_tasks(ss.str());
}

}  // namespace webskill::websim
