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

#ifndef TABHASH_REPORT_HPP_
#define TABHASH_REPORT_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "tabhash/stats.hpp"

namespace tabhash {

// Outcome of one experiment run. `stats` is a pure function of the
// configuration and seed; wall-clock figures live outside it.
struct ExperimentReport {
  std::string experiment;
  std::string scheme;
  std::string spec;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  nlohmann::json stats = nlohmann::json::object();

  std::map<std::string, Histogram> histograms;
  // One value per trial (e.g. mean probes of each run), in trial order.
  std::vector<double> per_run;

  double seconds = 0;
  std::uint64_t work_items = 0;  // hash evaluations or table operations

  // {experiment, scheme, spec, seed, trials, stats, info}
  nlohmann::json to_json() const;
};

// "bucket,count" rows of the named histogram (header included).
void write_histogram_csv(std::ostream& out, const Histogram& histogram);

// "run_index,value" rows with values sorted ascending, for CDF plots.
void write_cdf_csv(std::ostream& out, const std::vector<double>& per_run);

}  // namespace tabhash

#endif  // TABHASH_REPORT_HPP_
