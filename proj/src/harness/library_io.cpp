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

#include "webskill/harness/library_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "webskill/dsl/parser.hpp"

namespace webskill::harness {
namespace {

using nlohmann::json;

json skill_record(const dsl::SkillProgram& s) {
  json params = json::array();
  for (const auto& p : s.params) params.push_back(p.name);
  return {{"name", s.name},
          {"params", params},
          {"docstring", s.docstring},
          {"status", std::string(dsl::to_string(s.status))},
          {"namespace", s.ns},
          {"origin_episode", s.origin_episode},
          {"call_count", s.call_count},
          {"created_at", s.created_at},
          {"imported_from", s.imported_from},
          {"source", s.source}};
}

std::vector<json> header_and_records(std::string_view text, std::string_view schema) {
  std::vector<json> records;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (records.empty() || !records[0].is_object() || records[0].value("schema", "") != schema) {
    throw FormatError("missing header line with schema '" + std::string(schema) + "'");
  }
  if (records[0].value("version", 0) != 1) throw FormatError("unsupported version");
  return records;
}

}  // namespace

std::string library_to_jsonl(const agent::SkillLibrary& library) {
  std::string out = json{{"schema", kLibrarySchema},
                         {"version", 1},
                         {"namespace", library.ns()},
                         {"imported_from", library.imported_from()},
                         {"clock", library.clock()}}
                        .dump() +
                    "\n";
  for (const auto* s : library.callable()) out += skill_record(*s).dump() + "\n";
  for (const auto& s : library.deprecated()) out += skill_record(s).dump() + "\n";
  return out;
}

agent::SkillLibrary library_from_jsonl(std::string_view text) {
  auto records = header_and_records(text, kLibrarySchema);
  const auto& h = records[0];
  agent::SkillLibrary lib(h.value("namespace", ""), h.value("imported_from", ""));
  lib.set_clock(h.value("clock", std::int64_t{0}));
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& r = records[i];
    try {
      auto skill = dsl::parse_single_skill(r.at("source").get<std::string>());
      if (skill.name != r.at("name").get<std::string>()) {
        throw FormatError("record " + std::to_string(i) + ": name does not match source");
      }
      auto status = dsl::parse_skill_status(r.value("status", "verified"));
      if (!status) throw FormatError("record " + std::to_string(i) + ": unknown status");
      skill.status = *status;
      skill.ns = r.value("namespace", lib.ns());
      skill.origin_episode = r.value("origin_episode", "");
      skill.call_count = r.value("call_count", std::int64_t{0});
      skill.created_at = r.value("created_at", "");
      skill.imported_from = r.value("imported_from", "");
      if (skill.status == dsl::SkillStatus::deprecated) {
        lib.insert_deprecated(std::move(skill));
      } else {
        lib.insert(std::move(skill));
      }
    } catch (const json::exception& e) {
      throw FormatError("record " + std::to_string(i) + ": " + e.what());
    } catch (const agent::SkillCollision& e) {
      throw FormatError("record " + std::to_string(i) + ": " + e.what());
    }
  }
  return lib;
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void save_library(const agent::SkillLibrary& library, const std::filesystem::path& path) {
  write_file(path, library_to_jsonl(library));
}

agent::SkillLibrary load_library(const std::filesystem::path& path) { return library_from_jsonl(read_file(path)); }

agent::SkillLibrary import_library(const agent::SkillLibrary& source, const std::string& ns) {
  agent::SkillLibrary out(ns, source.ns());
  out.set_clock(source.clock());
  for (const auto* s : source.callable()) {
    dsl::SkillProgram copy = *s;
    copy.imported_from = source.ns();
    copy.ns = ns;
    out.insert(std::move(copy));
  }
  for (const auto& s : source.deprecated()) {
    dsl::SkillProgram copy = s;
    if (copy.imported_from.empty()) copy.imported_from = source.ns();
    out.insert_deprecated(std::move(copy));
  }
  return out;
}

std::string memory_to_jsonl(const agent::Memory& memory) {
  std::string out = json{{"schema", kMemorySchema}, {"version", 1}}.dump() + "\n";
  for (const auto& e : memory.entries()) out += json{{"text", e}}.dump() + "\n";
  return out;
}

agent::Memory memory_from_jsonl(std::string_view text) {
  auto records = header_and_records(text, kMemorySchema);
  agent::Memory m;
  for (std::size_t i = 1; i < records.size(); ++i) {
    try {
      m = agent::add_to_memory(std::move(m), records[i].at("text").get<std::string>());
    } catch (const json::exception& e) {
      throw FormatError("record " + std::to_string(i) + ": " + e.what());
    }
  }
  return m;
}

}  // namespace webskill::harness
