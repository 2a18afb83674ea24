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

#ifndef TABHASH_STATS_HPP_
#define TABHASH_STATS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>

#include "json.hpp"

namespace tabhash {

inline constexpr double kZ95 = 1.959963984540054;

// Sample statistics; variance uses the n - 1 denominator and the 95%
// half-width the normal approximation.
struct Summary {
  std::size_t count = 0;
  double mean = 0;
  double variance = 0;
  double stddev = 0;
  double min = 0;
  double max = 0;
  double std_error = 0;
  double ci95 = 0;
};

Summary summarize(std::span<const double> values);

struct Proportion {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double p = 0;
  double std_error = 0;  // sqrt(p(1-p)/trials)
  double ci95 = 0;
};

Proportion proportion(std::uint64_t successes, std::uint64_t trials);

// Sparse integer histogram, bucket -> count.
using Histogram = std::map<std::int64_t, std::uint64_t>;

nlohmann::json to_json(const Summary& s);
nlohmann::json to_json(const Proportion& p);

}  // namespace tabhash

#endif  // TABHASH_STATS_HPP_
