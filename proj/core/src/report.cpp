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

#include "tabhash/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace tabhash {

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["scheme"] = scheme;
  j["spec"] = spec;
  j["seed"] = seed;
  j["trials"] = trials;
  j["stats"] = stats;
  nlohmann::json info;
  info["seconds"] = seconds;
  info["work_items"] = work_items;
  info["items_per_second"] = seconds > 0 ? static_cast<double>(work_items) / seconds : 0.0;
  j["info"] = info;
  return j;
}

void write_histogram_csv(std::ostream& out, const Histogram& histogram) {
  out << "bucket,count\n";
  for (const auto& [bucket, count] : histogram) out << bucket << ',' << count << '\n';
}

void write_cdf_csv(std::ostream& out, const std::vector<double>& per_run) {
  std::vector<double> sorted = per_run;
  std::sort(sorted.begin(), sorted.end());
  out << "run_index,value\n";
  char buf[64];
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, sorted[i]);
    out << buf;
  }
}

}  // namespace tabhash
