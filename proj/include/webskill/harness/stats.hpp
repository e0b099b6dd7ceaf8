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

#include <cstddef>
#include <span>

#include "webskill/error.hpp"

namespace webskill::harness {

class DegenerateSample : public Error {
 public:
  using Error::Error;
};

struct TTestResult {
  double t_stat = 0;
  double degrees_of_freedom = 0;
  double p_value = 1;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  /// |t| > 2 and p < 0.05.
  bool significant() const;
};

/// Unequal-variance two-sample t-test with a two-sided p-value. Throws
/// DegenerateSample when a sample has fewer than two values or both samples
/// have zero variance.
TTestResult welch_t_test(std::span<const double> xs, std::span<const double> ys);

}  // namespace webskill::harness
