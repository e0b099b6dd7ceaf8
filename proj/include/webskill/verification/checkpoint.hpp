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

#include <vector>

#include "webskill/agent/episode.hpp"
#include "webskill/websim/site.hpp"
#include "webskill/websim/task.hpp"

namespace webskill::verification {

/// Decides one checkpoint from the episode's final state and logs.
/// message_contains looks at every message sent, ignoring case.
bool checkpoint_passes(const websim::CheckpointSpec& spec, const agent::Episode& episode,
                       const websim::SiteSpec& site);

/// Weighted fraction of passing checkpoints. Throws Error when `specs` is
/// empty or the total weight is not positive.
double checkpoint_score(const agent::Episode& episode, const websim::SiteSpec& site,
                        const std::vector<websim::CheckpointSpec>& specs);

}  // namespace webskill::verification
