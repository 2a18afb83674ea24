// Copyright 2026 The Tabhash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tabhash/stats.hpp"

#include <algorithm>
#include <cmath>

namespace tabhash {

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  // Welford keeps large-magnitude samples (fourth powers) stable.
  double mean = 0;
  double m2 = 0;
  std::size_t k = 0;
  s.min = values.front();
  s.max = values.front();
  for (double v : values) {
    ++k;
    const double delta = v - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (v - mean);
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = mean;
  s.variance = s.count > 1 ? m2 / static_cast<double>(s.count - 1) : 0.0;
  s.stddev = std::sqrt(s.variance);
  s.std_error = s.stddev / std::sqrt(static_cast<double>(s.count));
  s.ci95 = kZ95 * s.std_error;
  return s;
}

Proportion proportion(std::uint64_t successes, std::uint64_t trials) {
  Proportion p;
  p.successes = successes;
  p.trials = trials;
  if (trials == 0) return p;
  p.p = static_cast<double>(successes) / static_cast<double>(trials);
  p.std_error = std::sqrt(p.p * (1 - p.p) / static_cast<double>(trials));
  p.ci95 = kZ95 * p.std_error;
  return p;
}

nlohmann::json to_json(const Summary& s) {
  return {{"count", s.count}, {"mean", s.mean},       {"variance", s.variance},
          {"stddev", s.stddev}, {"min", s.min},       {"max", s.max},
          {"std_error", s.std_error}, {"ci95", s.ci95}};
}

nlohmann::json to_json(const Proportion& p) {
  return {{"successes", p.successes}, {"trials", p.trials}, {"p", p.p},
          {"std_error", p.std_error}, {"ci95", p.ci95}};
}

}  // namespace tabhash
