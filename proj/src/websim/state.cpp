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

#include "webskill/websim/state.hpp"

#include <string_view>

namespace webskill::websim {

namespace {

class Fnv1a {
 public:
  void bytes(std::string_view s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 0x100000001b3ULL;
    }
  }
  // Length-prefixed so that field boundaries cannot be forged by content.
  void field(std::string_view s) {
    number(s.size());
    bytes(s);
  }
  void number(std::uint64_t n) {
    for (int i = 0; i < 8; ++i) {
      h_ ^= static_cast<unsigned char>(n >> (8 * i));
      h_ *= 0x100000001b3ULL;
    }
  }
  std::uint64_t digest() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace

std::string flag_text(const FlagValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  std::string out;
  for (const auto& item : std::get<std::vector<std::string>>(v)) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

const FlagValue* EnvState::flag(const std::string& name) const {
  auto it = flags.find(name);
  return it == flags.end() ? nullptr : &it->second;
}

dsl::Fingerprint fingerprint(const EnvState& s) {
  Fnv1a h;
  h.field(s.current_url());
  h.number(s.overrides.size());
  for (const auto& [bid, value] : s.overrides) {
    h.field(bid);
    h.field(value);
  }
  h.number(s.popup ? 1 : 0);
  if (s.popup) h.field(*s.popup);
  h.number(s.flags.size());
  for (const auto& [name, value] : s.flags) {
    h.field(name);
    if (const auto* str = std::get_if<std::string>(&value)) {
      h.number(0);
      h.field(*str);
    } else {
      const auto& list = std::get<std::vector<std::string>>(value);
      h.number(list.size() + 1);
      for (const auto& item : list) h.field(item);
    }
  }
  h.number(s.message_log.size());
  return {h.digest()};
}

}  // namespace webskill::websim
