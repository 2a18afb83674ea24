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

#ifndef TABHASH_RUN_HPP_
#define TABHASH_RUN_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "tabhash/report.hpp"

namespace tabhash {

// One experiment invocation. Zero sizes pick per-experiment defaults.
struct RunConfig {
  std::string experiment;  // bins | linear-probing | cuckoo | minwise | similarity |
                           // fourth-moment | independence
  std::string scheme = "tab-c4";
  std::string spec = "random";
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::size_t ops = 0;        // linear-probing update cycles
  std::size_t k = 64;         // similarity sketch size
  std::size_t nb = 0;         // similarity |B|, B = first nb keys of A
  std::size_t subtrials = 0;  // cuckoo sub-event trials
  bool query_dependent = false;
  std::string out;  // JSON report
  std::string csv;  // main histogram
  std::string cdf;  // per-run values, sorted
};

void to_json(nlohmann::json& j, const RunConfig& config);
void from_json(const nlohmann::json& j, RunConfig& config);

// Replaces config.seed with $TABHASH_SEED when set. Throws ConfigError if the
// variable does not parse.
void apply_seed_override(RunConfig& config);

// Runs the experiment, writes the requested artifacts and prints a one-line
// summary. Throws ConfigError for bad configurations and Error when an
// output cannot be written.
ExperimentReport run(const RunConfig& config, std::ostream& summary);

// "<experiment> <scheme> <statistic> = <value> +- <ci95> (T=<trials>)".
std::string summary_line(const ExperimentReport& report);

}  // namespace tabhash

#endif  // TABHASH_RUN_HPP_
