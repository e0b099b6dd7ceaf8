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

#include "webskill/harness/stats.hpp"

#include <cmath>

#include <boost/math/special_functions/beta.hpp>

namespace webskill::harness {
namespace {

struct Moments {
  double mean = 0;
  double var = 0;  // unbiased
};

Moments moments(std::span<const double> xs) {
  Moments m;
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  for (double x : xs) m.var += (x - m.mean) * (x - m.mean);
  m.var /= static_cast<double>(xs.size() - 1);
  return m;
}

}  // namespace

bool TTestResult::significant() const { return std::abs(t_stat) > 2 && p_value < 0.05; }

TTestResult welch_t_test(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() < 2 || ys.size() < 2) throw DegenerateSample("each sample needs at least two values");
  auto a = moments(xs);
  auto b = moments(ys);
  double n1 = static_cast<double>(xs.size());
  double n2 = static_cast<double>(ys.size());
  double va = a.var / n1;
  double vb = b.var / n2;
  if (va + vb == 0) throw DegenerateSample("both samples have zero variance");

  TTestResult r;
  r.n1 = xs.size();
  r.n2 = ys.size();
  r.t_stat = (a.mean - b.mean) / std::sqrt(va + vb);
  r.degrees_of_freedom = (va + vb) * (va + vb) / (va * va / (n1 - 1) + vb * vb / (n2 - 1));
  // P(|T| > |t|) = I_{df/(df+t^2)}(df/2, 1/2).
  double x = r.degrees_of_freedom / (r.degrees_of_freedom + r.t_stat * r.t_stat);
  r.p_value = x >= 1 ? 1.0 : boost::math::ibeta(r.degrees_of_freedom / 2, 0.5, x);
  return r;
}

}  // namespace webskill::harness
