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

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "webskill/websim/site.hpp"
#include "webskill/websim/task.hpp"

namespace webskill::testing {

inline std::string data_path(const std::string& rel) { return std::string(WEBSKILL_DATA_DIR) + "/" + rel; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::shared_ptr<const websim::SiteSpec> load_site(const std::string& id) {
  return websim::load_site_file(data_path("sites/" + id + ".json"));
}

inline std::vector<websim::Task> load_site_tasks(const std::string& id) {
  return websim::load_task_file(data_path("tasks/" + id + ".json"));
}

inline const std::vector<std::string>& bundled_sites() {
  static const std::vector<std::string> kSites = {"mini_shop", "mini_admin", "mini_forum", "mini_gitlab",
                                                  "mini_map"};
  return kSites;
}

}  // namespace webskill::testing
