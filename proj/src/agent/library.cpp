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

#include "webskill/agent/library.hpp"

namespace webskill::agent {

SkillLibrary::SkillLibrary(std::string ns, std::string imported_from)
    : ns_(std::move(ns)), imported_from_(std::move(imported_from)) {}

const dsl::SkillProgram* SkillLibrary::find(std::string_view name) const {
  auto it = skills_.find(name);
  return it == skills_.end() ? nullptr : &it->second;
}

std::vector<const dsl::SkillProgram*> SkillLibrary::callable() const {
  std::vector<const dsl::SkillProgram*> out;
  for (const auto& [_, s] : skills_) out.push_back(&s);
  return out;
}

dsl::SkillResolver SkillLibrary::resolver() const {
  return [this](std::string_view name) { return find(name); };
}

void SkillLibrary::insert(dsl::SkillProgram skill) {
  if (skills_.count(skill.name)) throw SkillCollision("skill '" + skill.name + "' already in library");
  std::string name = skill.name;
  skills_.emplace(std::move(name), std::move(skill));
}

void SkillLibrary::note_call(std::string_view name) {
  auto it = skills_.find(name);
  if (it != skills_.end()) ++it->second.call_count;
}

SkillLibrary SkillLibrary::provisional(const std::vector<dsl::SkillProgram>& extra) const {
  SkillLibrary out = *this;
  for (const auto& s : extra) out.skills_.insert_or_assign(s.name, s);
  return out;
}

SkillLibrary commit_skills(const SkillLibrary& library, const std::vector<dsl::SkillProgram>& skills,
                           const std::set<std::string>& called_names, bool allow_update) {
  SkillLibrary next = library;
  std::vector<std::string> added;
  for (const auto& s : skills) {
    if (!called_names.count(s.name)) continue;
    auto it = next.skills_.find(s.name);
    if (it != next.skills_.end()) {
      bool imported = !it->second.imported_from.empty();
      if (!allow_update || !imported) {
        throw SkillCollision("skill '" + s.name + "' collides with an existing " +
                             (imported ? "imported" : "verified") + " skill");
      }
      dsl::SkillProgram old = std::move(it->second);
      old.status = dsl::SkillStatus::deprecated;
      next.deprecated_.push_back(std::move(old));
      next.skills_.erase(it);
    }
    dsl::SkillProgram copy = s;
    copy.status = dsl::SkillStatus::verified;
    copy.ns = library.ns();
    copy.imported_from.clear();
    copy.created_at = std::to_string(++next.clock_);
    next.skills_.emplace(copy.name, std::move(copy));
    added.push_back(s.name);
  }
  if (!added.empty()) {
    // Check the whole active graph: a shadowing skill can close a cycle
    // through imported skills that call it by name.
    std::vector<std::string> roots;
    for (const auto& [name, _] : next.skills_) roots.push_back(name);
    if (!dsl::call_graph_acyclic(roots, next.resolver())) {
      std::string names;
      for (const auto& n : added) names += (names.empty() ? "" : ", ") + n;
      throw CycleIntroduced("committing {" + names + "} would create a call cycle");
    }
  }
  return next;
}

dsl::SkillResolver overlay_resolver(const SkillLibrary& library, const std::vector<dsl::SkillProgram>& extra) {
  return [&library, &extra](std::string_view name) -> const dsl::SkillProgram* {
    for (const auto& s : extra) {
      if (s.name == name) return &s;
    }
    return library.find(name);
  };
}

}  // namespace webskill::agent
