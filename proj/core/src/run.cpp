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

#include "tabhash/run.hpp"

#include <bit>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tabhash/errors.hpp"
#include "tabhash/experiments.hpp"
#include "tabhash/keyset.hpp"
#include "tabhash/scheme.hpp"

namespace tabhash {

#define TABHASH_RUN_FIELDS(X)                                                              \
  X(experiment) X(scheme) X(spec) X(n) X(m) X(trials) X(seed) X(threads) X(ops) X(k) X(nb) \
  X(subtrials) X(query_dependent) X(out) X(csv) X(cdf)

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json::object();
#define X(field) j[#field] = c.field;
  TABHASH_RUN_FIELDS(X)
#undef X
}

// Missing keys keep their defaults.
void from_json(const nlohmann::json& j, RunConfig& c) {
  try {
#define X(field) \
  if (j.contains(#field)) j.at(#field).get_to(c.field);
    TABHASH_RUN_FIELDS(X)
#undef X
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("run config: ") + e.what());
  }
}

void apply_seed_override(RunConfig& config) {
  const char* env = std::getenv("TABHASH_SEED");
  if (env == nullptr || *env == '\0') return;
  try {
    std::size_t used = 0;
    const std::string text(env);
    config.seed = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw ConfigError(std::string("TABHASH_SEED is not an integer: ") + env);
  }
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out.flush()) throw Error("cannot write '" + path + "'");
}

const char* main_histogram(const std::string& experiment) {
  if (experiment == "bins") return "max_load";
  if (experiment == "linear-probing") return "R";
  if (experiment == "cuckoo") return "obstruction_keys";
  return "";
}

std::string fixed(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

}  // namespace

ExperimentReport run(const RunConfig& config, std::ostream& summary) {
  const SchemeConfig scheme = parse_scheme(config.scheme);
  if (config.trials == 0 && config.experiment != "independence") {
    throw ConfigError("trials must be positive");
  }
  const ExperimentContext ctx{config.seed, config.threads};
  const std::string& exp = config.experiment;

  ExperimentReport report;
  if (exp == "bins") {
    const KeySetSpec spec = parse_keyset(config.spec, config.n != 0 ? config.n : 1u << 16);
    const std::size_t m = config.m != 0 ? config.m : std::bit_ceil(std::max<std::size_t>(spec.n, 1));
    report = exp_bin_concentration(scheme, spec, m, config.trials, ctx);
  } else if (exp == "linear-probing") {
    const KeySetSpec spec = parse_keyset(config.spec, config.n != 0 ? config.n : 1u << 16);
    const std::size_t m = config.m != 0 ? config.m : std::bit_ceil(2 * std::max<std::size_t>(spec.n, 1));
    const std::size_t ops = config.ops != 0 ? config.ops : spec.n;
    report = exp_linear_probing(scheme, spec, m, ops, config.trials, ctx);
  } else if (exp == "cuckoo") {
    const KeySetSpec spec = parse_keyset(config.spec, config.n);
    const auto keys_hint = spec.n != 0 ? spec.n : generate(spec, key_shape(scheme)).size();
    const std::size_t m = config.m != 0 ? config.m : std::bit_ceil(2 * std::max<std::size_t>(keys_hint, 1));
    CuckooOptions options;
    options.subevent_trials = config.subtrials;
    report = exp_cuckoo(scheme, spec, m, config.trials, ctx, options);
  } else if (exp == "minwise") {
    const KeySetSpec spec = parse_keyset(config.spec, config.n != 0 ? config.n : 1024);
    report = exp_minwise(scheme, spec, config.trials, ctx);
  } else if (exp == "similarity") {
    KeySetSpec spec = parse_keyset(config.spec, config.n != 0 ? config.n : 1024);
    if (spec.seed == 0) spec.seed = derive_seed(config.seed, 0x6b657973);
    const auto a = generate(spec, key_shape(scheme));
    const std::size_t nb = config.nb != 0 ? config.nb : a.size() / 4;
    if (nb > a.size()) throw ConfigError("similarity: nb exceeds |A|");
    const std::vector<std::uint64_t> b(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(nb));
    report = exp_set_similarity(scheme, a, b, config.k, config.trials, ctx);
    report.spec = to_string(spec) + ";B=first " + std::to_string(nb);
  } else if (exp == "fourth-moment") {
    KeySetSpec spec = parse_keyset(config.spec, config.n != 0 ? config.n : 1u << 12);
    if (spec.seed == 0) spec.seed = derive_seed(config.seed, 0x6b657973);
    const auto keys = generate(spec, key_shape(scheme));
    FourthMomentOptions options;
    options.query_dependent = config.query_dependent;
    report = exp_fourth_moment(scheme, keys, {}, config.m != 0 ? config.m : 256, config.trials, ctx,
                               options);
    report.spec = to_string(spec);
  } else if (exp == "independence") {
    if (scheme.kind != SchemeKind::kTabulation) {
      throw ConfigError("independence: needs a tabulation scheme");
    }
    TabulationParams p = scheme.tab;
    p.out_bits = scheme.out_bits;
    report = exp_independence_exhaustive(p);
    report.seed = config.seed;
  } else {
    throw ConfigError("unknown experiment '" + exp + "'");
  }

  if (!config.out.empty()) write_file(config.out, report.to_json().dump(2) + "\n");
  if (!config.csv.empty()) {
    std::ostringstream s;
    const auto it = report.histograms.find(main_histogram(exp));
    write_histogram_csv(s, it != report.histograms.end() ? it->second : Histogram{});
    write_file(config.csv, s.str());
  }
  if (!config.cdf.empty()) {
    std::ostringstream s;
    write_cdf_csv(s, report.per_run);
    write_file(config.cdf, s.str());
  }
  summary << summary_line(report) << "\n";
  return report;
}

std::string summary_line(const ExperimentReport& r) {
  const auto& st = r.stats;
  std::string name, value, ci;
  auto from_summary = [&](const char* key) {
    name = key;
    value = fixed(st[key]["mean"].get<double>());
    ci = fixed(st[key]["ci95"].get<double>());
  };
  if (r.experiment == "bins") {
    from_summary("max_load");
  } else if (r.experiment == "linear-probing") {
    from_summary("probes_per_update");
  } else if (r.experiment == "cuckoo") {
    if (st.contains("success")) {
      name = "success";
      value = fixed(st["success"]["p"].get<double>());
      ci = fixed(st["success"]["ci95"].get<double>());
    } else {
      name = "P1";
      value = fixed(st["subevents"]["P1"]["p"].get<double>());
      ci = fixed(st["subevents"]["P1"]["ci95"].get<double>());
    }
  } else if (r.experiment == "minwise") {
    name = "p_hat*n";
    value = fixed(st["p_times_n"].get<double>());
    ci = fixed(st["p_times_n_ci95"].get<double>());
  } else if (r.experiment == "similarity") {
    if (st.contains("estimate")) {
      from_summary("estimate");
    } else {
      name = "min_collision";
      value = fixed(st["min_collision"]["p"].get<double>());
      ci = fixed(st["min_collision"]["ci95"].get<double>());
    }
  } else if (r.experiment == "fourth-moment") {
    name = "ratio";
    value = fixed(st["ratio"].get<double>());
    ci = fixed(kZ95 * st["ratio_std_error"].get<double>());
  } else if (r.experiment == "independence") {
    return r.experiment + " " + r.scheme + " three_wise_uniform = " +
           (st["three_wise_uniform"].get<bool>() ? "true" : "false") + " (fillings=" +
           std::to_string(r.trials) + ")";
  }
  return r.experiment + " " + r.scheme + " " + name + " = " + value + " +- " + ci +
         " (T=" + std::to_string(r.trials) + ")";
}

}  // namespace tabhash
