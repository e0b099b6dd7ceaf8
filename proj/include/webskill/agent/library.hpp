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
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "webskill/dsl/ast.hpp"
#include "webskill/dsl/validator.hpp"
#include "webskill/error.hpp"

namespace webskill::agent {

class CycleIntroduced : public Error {
 public:
  using Error::Error;
};

/// A new skill reuses a name already taken and shadowing is not allowed.
class SkillCollision : public Error {
 public:
  using Error::Error;
};

/// Callable skills of one site. Value type: commits return a new library so
/// concurrent readers can keep their snapshot.
class SkillLibrary {
 public:
  explicit SkillLibrary(std::string ns = {}, std::string imported_from = {});

  const std::string& ns() const { return ns_; }
  const std::string& imported_from() const { return imported_from_; }

  /// Active (non-deprecated) skill by name, or nullptr.
  const dsl::SkillProgram* find(std::string_view name) const;
  /// Active skills ordered by name.
  std::vector<const dsl::SkillProgram*> callable() const;
  /// Shadowed skills, kept for audit; never callable.
  const std::vector<dsl::SkillProgram>& deprecated() const { return deprecated_; }
  std::size_t size() const { return skills_.size(); }
  bool empty() const { return skills_.empty(); }
  std::int64_t clock() const { return clock_; }

  /// Resolver over the active skills. Valid while this library is alive.
  dsl::SkillResolver resolver() const;

  /// Adds skills as-is (used by import); names must be free.
  void insert(dsl::SkillProgram skill);
  void insert_deprecated(dsl::SkillProgram skill) { deprecated_.push_back(std::move(skill)); }
  void set_clock(std::int64_t c) { clock_ = c; }
  void set_imported_from(std::string ns) { imported_from_ = std::move(ns); }
  void note_call(std::string_view name);

  /// Copy where `extra` is callable too, replacing same-named skills. Used for
  /// trial runs; nothing is deprecated and no checks are made.
  SkillLibrary provisional(const std::vector<dsl::SkillProgram>& extra) const;

 private:
  friend SkillLibrary commit_skills(const SkillLibrary&, const std::vector<dsl::SkillProgram>&,
                                    const std::set<std::string>&, bool);
  std::string ns_;
  std::string imported_from_;
  std::map<std::string, dsl::SkillProgram, std::less<>> skills_;
  std::vector<dsl::SkillProgram> deprecated_;
  std::int64_t clock_ = 0;
};

/// Adds the skills named in `called_names` with status verified; the rest are
/// dropped. With `allow_update`, a new skill may shadow an imported one, which
/// moves to the deprecated list. Throws SkillCollision or CycleIntroduced and
/// leaves `library` untouched.
SkillLibrary commit_skills(const SkillLibrary& library, const std::vector<dsl::SkillProgram>& skills,
                           const std::set<std::string>& called_names, bool allow_update = false);

/// Resolver over `extra` first, then `library`. Both must outlive it.
dsl::SkillResolver overlay_resolver(const SkillLibrary& library, const std::vector<dsl::SkillProgram>& extra);

}  // namespace webskill::agent
