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

#include "tabhash/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <string>

#include "absl/container/flat_hash_set.h"
#include "tabhash/bins.hpp"
#include "tabhash/bits.hpp"
#include "tabhash/cuckoo.hpp"
#include "tabhash/errors.hpp"
#include "tabhash/linear_probing.hpp"
#include "tabhash/parallel.hpp"
#include "tabhash/random_stream.hpp"

namespace tabhash {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Evaluates a scheme on keys that are each queried once. For the truly
// random oracle the memo is pointless, so values come straight from the
// oracle's stream; they equal what TrulyRandomOracle(seed) would return for
// the same query order.
class FreshHasher {
 public:
  FreshHasher(const SchemeConfig& cfg, std::uint64_t seed) : out_bits_(cfg.out_bits) {
    if (cfg.kind == SchemeKind::kTrulyRandom) {
      stream_.emplace(seed, TrulyRandomOracle::kStreamId);
    } else {
      handle_.emplace(make_scheme(cfg, seed));
    }
  }

  std::uint64_t operator()(std::uint64_t key) {
    return handle_ ? (*handle_)(key) : stream_->bits(out_bits_);
  }

  unsigned out_bits() const { return out_bits_; }

 private:
  unsigned out_bits_;
  std::optional<SchemeHandle> handle_;
  std::optional<StrongStream> stream_;
};

constexpr std::uint64_t kKeysRole = 0x6b657973;  // "keys"

std::vector<std::uint64_t> instance_keys(const SchemeConfig& scheme, const KeySetSpec& spec,
                                         const ExperimentContext& ctx, std::string* text) {
  KeySetSpec s = spec;
  if (s.seed == 0) s.seed = derive_seed(ctx.master_seed, kKeysRole);
  if (text != nullptr) *text = to_string(s);
  return generate(s, key_shape(scheme));
}

ExperimentReport start_report(std::string experiment, const SchemeConfig& scheme,
                              std::string spec, std::size_t trials,
                              const ExperimentContext& ctx) {
  ExperimentReport r;
  r.experiment = std::move(experiment);
  r.scheme = to_string(scheme);
  r.spec = std::move(spec);
  r.seed = ctx.master_seed;
  r.trials = trials;
  return r;
}

std::uint64_t default_query(const std::vector<std::uint64_t>& keys, const SchemeConfig& scheme,
                            const std::optional<std::uint64_t>& query) {
  if (query) return *query;
  return first_key_outside(keys, key_bits_of(scheme));
}

void check_power_of_two(std::size_t m, const SchemeConfig& scheme, const char* what) {
  if (!is_power_of_two(m)) throw ConfigError(std::string(what) + ": m must be a power of two");
  if (log2_exact(m) > scheme.out_bits) {
    throw ConfigError(std::string(what) + ": hash has fewer than lg m bits");
  }
}

std::uint64_t integer_cube_root(std::uint64_t n) {
  auto s = static_cast<std::uint64_t>(std::llround(std::cbrt(static_cast<double>(n))));
  while (s * s * s > n) --s;
  while ((s + 1) * (s + 1) * (s + 1) <= n) ++s;
  return s;
}

}  // namespace

TabulationParams key_shape(const SchemeConfig& scheme) {
  const unsigned bits = key_bits_of(scheme);
  TabulationParams p;
  p.char_bits = 8;
  while (bits % p.char_bits != 0) p.char_bits /= 2;
  p.c = bits / p.char_bits;
  p.out_bits = scheme.out_bits;
  return p;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t role) {
  return derive_seed(derive_seed(master, trial), role);
}

// ---- Bins ---------------------------------------------------------------

ExperimentReport exp_bin_concentration(const SchemeConfig& scheme, const KeySetSpec& spec,
                                       std::size_t m, std::size_t trials,
                                       const ExperimentContext& ctx, const BinOptions& options) {
  check_power_of_two(m, scheme, "bins");
  if (options.fixed_bin >= m) throw ConfigError("bins: fixed bin out of range");
  const auto start = Clock::now();
  std::string text;
  const auto keys = instance_keys(scheme, spec, ctx, &text);
  const std::uint64_t q = default_query(keys, scheme, options.query);
  ExperimentReport report = start_report("bins", scheme, text, trials, ctx);

  struct Loads {
    double max = 0, fixed = 0, query = 0;
  };
  const auto loads = run_trials<Loads>(trials, ctx.threads, [&](std::size_t t) {
    const SchemeHandle h = make_scheme(scheme, trial_seed(ctx.master_seed, t));
    const BinHistogram hist = bins_distribute(keys, h, m, QueryBin{q, options.select});
    return Loads{static_cast<double>(hist.max_load()),
                 static_cast<double>(hist.counts[options.fixed_bin]), hist.selected_load()};
  });

  std::vector<double> max_load, fixed, query;
  for (const auto& l : loads) {
    max_load.push_back(l.max);
    fixed.push_back(l.fixed);
    query.push_back(l.query);
    ++report.histograms["max_load"][static_cast<std::int64_t>(l.max)];
    ++report.histograms["query_load"][static_cast<std::int64_t>(l.query)];
  }
  const double mu = static_cast<double>(keys.size()) / static_cast<double>(m);
  report.stats["n"] = keys.size();
  report.stats["m"] = m;
  report.stats["mu"] = mu;
  report.stats["query"] = q;
  report.stats["max_load"] = to_json(summarize(max_load));
  report.stats["fixed_bin_load"] = to_json(summarize(fixed));
  report.stats["query_bin_load"] = to_json(summarize(query));
  report.per_run = max_load;
  report.work_items = static_cast<std::uint64_t>(trials) * (keys.size() + 1);
  report.seconds = seconds_since(start);
  return report;
}

// ---- Linear probing -----------------------------------------------------

ExperimentReport exp_linear_probing(const SchemeConfig& scheme, const KeySetSpec& spec,
                                    std::size_t m, std::size_t ops, std::size_t trials,
                                    const ExperimentContext& ctx,
                                    const LinearProbingOptions& options) {
  check_power_of_two(m, scheme, "linear-probing");
  const auto start = Clock::now();
  std::string text;
  const auto keys = instance_keys(scheme, spec, ctx, &text);
  const std::size_t n = keys.size();
  if (n >= m) throw ConfigError("linear-probing: fill n/m must be below 1");
  if (n == 0) ops = 0;
  const unsigned key_bits = key_bits_of(scheme);
  const absl::flat_hash_set<std::uint64_t> members(keys.begin(), keys.end());
  if (key_bits < 64 && members.size() >= (std::uint64_t{1} << key_bits) &&
      options.fresh_queries > 0) {
    throw ConfigError("linear-probing: no key outside the set for fresh queries");
  }
  ExperimentReport report = start_report("linear-probing", scheme, text, trials, ctx);

  struct Run {
    double mean = 0, insert = 0, erase = 0;
    std::vector<std::size_t> fresh;
  };
  const auto runs = run_trials<Run>(trials, ctx.threads, [&](std::size_t t) {
    LinearProbingTable table(m, make_scheme(scheme, trial_seed(ctx.master_seed, t)));
    for (std::uint64_t k : keys) table.insert(k);
    std::uint64_t ins = 0, del = 0;
    for (std::size_t i = 0; i < ops; ++i) {
      const std::uint64_t k = keys[i % n];
      del += table.erase(k);
      ins += table.insert(k);
    }
    Run run;
    if (ops > 0) {
      const double d = static_cast<double>(ops);
      run.insert = static_cast<double>(ins) / d;
      run.erase = static_cast<double>(del) / d;
      run.mean = static_cast<double>(ins + del) / (2 * d);
    }
    StrongStream fresh(trial_seed(ctx.master_seed, t, 2), 0x6672657368);
    run.fresh.reserve(options.fresh_queries);
    while (run.fresh.size() < options.fresh_queries) {
      const std::uint64_t q = fresh.bits(key_bits);
      if (!members.contains(q)) run.fresh.push_back(table.run_length(q));
    }
    return run;
  });

  std::vector<double> means, inserts, erases, fresh_r;
  std::uint64_t positive = 0, queries = 0;
  auto& hist = report.histograms["R"];
  for (const auto& run : runs) {
    means.push_back(run.mean);
    inserts.push_back(run.insert);
    erases.push_back(run.erase);
    for (std::size_t r : run.fresh) {
      ++hist[static_cast<std::int64_t>(r)];
      fresh_r.push_back(static_cast<double>(r));
      positive += r > 0;
      ++queries;
    }
  }
  const Summary s = summarize(means);
  report.stats["n"] = n;
  report.stats["m"] = m;
  report.stats["fill"] = static_cast<double>(n) / static_cast<double>(m);
  report.stats["ops"] = ops;
  report.stats["probes_per_update"] = to_json(s);
  report.stats["cv"] = s.mean > 0 ? s.stddev / s.mean : 0.0;
  report.stats["insert_probes"] = to_json(summarize(inserts));
  report.stats["delete_probes"] = to_json(summarize(erases));
  report.stats["fresh_R"] = to_json(summarize(fresh_r));
  report.stats["fresh_R_positive"] = to_json(proportion(positive, queries));
  report.per_run = means;
  report.work_items = static_cast<std::uint64_t>(trials) * (n + 2 * ops + options.fresh_queries);
  report.seconds = seconds_since(start);
  return report;
}

// ---- Cuckoo hashing -----------------------------------------------------

CuckooSubevents cuckoo_subevents(const SchemeConfig& scheme, const TabulationParams& shape,
                                 std::uint64_t side, std::size_t m, std::size_t trials,
                                 const ExperimentContext& ctx) {
  check_power_of_two(m, scheme, "cuckoo");
  if (shape.c < 3) throw ConfigError("cuckoo: sub-events need at least three characters");
  if (side == 0 || side > shape.alphabet_size()) {
    throw ConfigError("cuckoo: cube side must lie in 1..alphabet size");
  }
  const unsigned b = shape.char_bits;
  std::vector<std::uint64_t> half0, half1;
  for (std::uint64_t y = 0; y < side; ++y) {
    for (std::uint64_t x = 0; x < side; ++x) half0.push_back(x | (y << b));
  }
  for (std::uint64_t z = 0; z < side; ++z) half1.push_back(z << (2 * b));

  struct Events {
    bool triple = false, pair = false;
  };
  const auto events = run_trials<Events>(trials, ctx.threads, [&](std::size_t t) {
    thread_local std::vector<std::uint8_t> count;
    if (count.size() != m) count.assign(m, 0);
    auto max_multiplicity = [&](const std::vector<std::uint64_t>& half, std::uint64_t seed,
                                unsigned stop) {
      FreshHasher h(scheme, seed);
      std::vector<std::size_t> touched;
      touched.reserve(half.size());
      unsigned best = 0;
      for (std::uint64_t k : half) {
        const std::size_t bin = bin_of(h(k), h.out_bits(), m);
        if (count[bin] == 0) touched.push_back(bin);
        best = std::max<unsigned>(best, ++count[bin]);
        if (best >= stop) break;
      }
      for (std::size_t bin : touched) count[bin] = 0;
      return best;
    };
    Events e;
    e.triple = max_multiplicity(half0, trial_seed(ctx.master_seed, t, 0), 3) >= 3;
    e.pair = max_multiplicity(half1, trial_seed(ctx.master_seed, t, 1), 2) >= 2;
    return e;
  });

  std::uint64_t triple = 0, pair = 0, both = 0;
  for (const auto& e : events) {
    triple += e.triple;
    pair += e.pair;
    both += e.triple && e.pair;
  }
  return {proportion(triple, trials), proportion(pair, trials), proportion(both, trials)};
}

ExperimentReport exp_cuckoo(const SchemeConfig& scheme, const KeySetSpec& spec, std::size_t m,
                            std::size_t trials, const ExperimentContext& ctx,
                            const CuckooOptions& options) {
  check_power_of_two(m, scheme, "cuckoo");
  const auto start = Clock::now();
  std::string text;
  const auto keys = instance_keys(scheme, spec, ctx, &text);
  ExperimentReport report = start_report("cuckoo", scheme, text, trials, ctx);
  report.stats["n"] = keys.size();
  report.stats["m"] = m;

  if (options.build) {
    struct Build {
      bool ok = false;
      std::size_t obstruction = 0;
    };
    const auto builds = run_trials<Build>(trials, ctx.threads, [&](std::size_t t) {
      const SchemeHandle h0 = make_scheme(scheme, trial_seed(ctx.master_seed, t, 0));
      const SchemeHandle h1 = make_scheme(scheme, trial_seed(ctx.master_seed, t, 1));
      const auto result = cuckoo_build_static(keys, h0, h1, m);
      if (succeeded(result)) return Build{true, 0};
      return Build{false, std::get<CuckooObstruction>(result).keys.size()};
    });
    std::uint64_t ok = 0;
    for (const auto& b : builds) {
      ok += b.ok;
      report.per_run.push_back(b.ok ? 1.0 : 0.0);
      if (!b.ok) ++report.histograms["obstruction_keys"][static_cast<std::int64_t>(b.obstruction)];
    }
    report.stats["success"] = to_json(proportion(ok, trials));
    report.stats["failures"] = trials - ok;
    report.work_items += static_cast<std::uint64_t>(trials) * 2 * keys.size();
  }

  if (spec.kind == KeySetKind::kCuckooHard) {
    const std::uint64_t side = integer_cube_root(keys.size());
    const std::size_t sub_trials = options.subevent_trials != 0 ? options.subevent_trials : trials;
    const CuckooSubevents sub = cuckoo_subevents(scheme, key_shape(scheme), side, m, sub_trials, ctx);
    const double md = static_cast<double>(m);
    const double s = static_cast<double>(side);
    const double pairs = s * (s - 1) / 2;
    const double halves = s * s;
    const double triples = halves * (halves - 1) * (halves - 2) / 6;
    nlohmann::json j;
    j["trials"] = sub_trials;
    j["side"] = side;
    j["P1"] = to_json(sub.triple_h0);
    j["P2"] = to_json(sub.pair_h1);
    j["both"] = to_json(sub.both);
    j["P2_poisson"] = 1 - std::exp(-pairs / md);
    j["P1_poisson"] = 1 - std::exp(-triples / (md * md));
    report.stats["subevents"] = j;
    report.work_items += static_cast<std::uint64_t>(sub_trials) * (side * side + side);
  }
  report.seconds = seconds_since(start);
  return report;
}

// ---- Minwise ------------------------------------------------------------

ExperimentReport exp_minwise(const SchemeConfig& scheme, const KeySetSpec& spec,
                             std::size_t trials, const ExperimentContext& ctx,
                             const MinwiseOptions& options) {
  const auto start = Clock::now();
  std::string text;
  const auto keys = instance_keys(scheme, spec, ctx, &text);
  const std::size_t n = keys.size();
  const std::uint64_t q = default_query(keys, scheme, options.query);
  if (std::find(keys.begin(), keys.end(), q) != keys.end()) {
    throw PreconditionError("minwise: query key must not belong to the set");
  }
  const double c = scheme.kind == SchemeKind::kTabulation ? scheme.tab.c : 1.0;
  const auto needed = n < 2 ? 0u
                            : static_cast<unsigned>(std::ceil(
                                  (1 + 1 / c) * std::log2(static_cast<double>(n)) - 1e-9));
  if (scheme.out_bits < needed) {
    throw ConfigError("minwise: out_bits must be at least " + std::to_string(needed) +
                      " for n=" + std::to_string(n));
  }
  ExperimentReport report = start_report("minwise", scheme, text, trials, ctx);

  const auto wins = run_trials<std::uint8_t>(trials, ctx.threads, [&](std::size_t t) {
    FreshHasher h(scheme, trial_seed(ctx.master_seed, t));
    const std::uint64_t hq = h(q);
    for (std::uint64_t k : keys) {
      if (h(k) <= hq) return std::uint8_t{0};  // q loses ties
    }
    return std::uint8_t{1};
  });
  std::uint64_t won = 0;
  for (auto w : wins) won += w;
  const Proportion p = proportion(won, trials);
  const double nd = static_cast<double>(n);
  report.stats["n"] = n;
  report.stats["query"] = q;
  report.stats["min_out_bits"] = needed;
  report.stats["p_hat"] = to_json(p);
  report.stats["p_times_n"] = p.p * nd;
  report.stats["p_times_n_std_error"] = p.std_error * nd;
  report.stats["p_times_n_ci95"] = p.ci95 * nd;
  report.stats["ideal"] = 1 / (nd + 1);
  report.work_items = static_cast<std::uint64_t>(trials) * (n + 1);
  report.seconds = seconds_since(start);
  return report;
}

// ---- Set similarity ------------------------------------------------------

std::vector<std::uint64_t> bottom_k(std::span<const std::uint64_t> keys,
                                    const SchemeHandle& scheme, std::size_t k) {
  k = std::min(k, keys.size());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> hk;
  hk.reserve(keys.size());
  for (std::uint64_t key : keys) hk.emplace_back(scheme(key), key);
  std::nth_element(hk.begin(), hk.begin() + static_cast<std::ptrdiff_t>(k), hk.end());
  hk.resize(k);
  std::sort(hk.begin(), hk.end());
  std::vector<std::uint64_t> out;
  out.reserve(k);
  for (const auto& [h, key] : hk) out.push_back(key);
  return out;
}

ExperimentReport exp_set_similarity(const SchemeConfig& scheme,
                                    std::span<const std::uint64_t> a,
                                    std::span<const std::uint64_t> b, std::size_t k,
                                    std::size_t trials, const ExperimentContext& ctx) {
  if (k == 0 || k > a.size()) throw ConfigError("similarity: k must lie in 1..|A|");
  const auto start = Clock::now();
  const absl::flat_hash_set<std::uint64_t> in_a(a.begin(), a.end());
  const absl::flat_hash_set<std::uint64_t> in_b(b.begin(), b.end());
  std::size_t common = 0;
  for (std::uint64_t x : in_b) common += in_a.contains(x);
  const bool subset = common == in_b.size();

  ExperimentReport report =
      start_report("similarity", scheme,
                   "sets:A=" + std::to_string(a.size()) + ",B=" + std::to_string(b.size()) +
                       ",k=" + std::to_string(k),
                   trials, ctx);

  struct Trial {
    double estimate = 0;
    bool min_equal = false;
  };
  const auto results = run_trials<Trial>(trials, ctx.threads, [&](std::size_t t) {
    const SchemeHandle h = make_scheme(scheme, trial_seed(ctx.master_seed, t));
    Trial r;
    const auto sketch = bottom_k(a, h, k);
    std::size_t hits = 0;
    for (std::uint64_t x : sketch) hits += in_b.contains(x);
    r.estimate = static_cast<double>(hits) / static_cast<double>(k);
    if (!b.empty()) {
      std::uint64_t min_a = ~std::uint64_t{0}, min_b = ~std::uint64_t{0};
      for (std::uint64_t x : a) min_a = std::min(min_a, h(x));
      for (std::uint64_t x : b) min_b = std::min(min_b, h(x));
      r.min_equal = min_a == min_b;
    }
    return r;
  });

  std::vector<double> estimates;
  std::uint64_t equal = 0;
  for (const auto& r : results) {
    estimates.push_back(r.estimate);
    equal += r.min_equal;
  }
  const std::size_t uni = in_a.size() + in_b.size() - common;
  report.stats["A"] = a.size();
  report.stats["B"] = b.size();
  report.stats["k"] = k;
  report.stats["subset"] = subset;
  if (subset) {
    report.stats["target"] = static_cast<double>(b.size()) / static_cast<double>(a.size());
    report.stats["estimate"] = to_json(summarize(estimates));
  }
  report.stats["jaccard"] = uni == 0 ? 1.0 : static_cast<double>(common) / static_cast<double>(uni);
  report.stats["min_collision"] = to_json(proportion(equal, trials));
  report.per_run = estimates;
  report.work_items = static_cast<std::uint64_t>(trials) * (2 * a.size() + b.size());
  report.seconds = seconds_since(start);
  return report;
}

// ---- Fourth moment -------------------------------------------------------

double fourth_moment_truly_random(std::span<const double> weights, std::size_t m) {
  const double p = 1.0 / static_cast<double>(m);
  const double pq = p * (1 - p);
  double s2 = 0, s4 = 0;
  for (double w : weights) {
    s2 += w * w;
    s4 += w * w * w * w;
  }
  return s4 * pq * (1 - 3 * pq) + 3 * (s2 * s2 - s4) * pq * pq;
}

ExperimentReport exp_fourth_moment(const SchemeConfig& scheme, std::span<const std::uint64_t> keys,
                                   std::span<const double> weights, std::size_t m,
                                   std::size_t trials, const ExperimentContext& ctx,
                                   const FourthMomentOptions& options) {
  check_power_of_two(m, scheme, "fourth-moment");
  if (!weights.empty() && weights.size() != keys.size()) {
    throw ConfigError("fourth-moment: one weight per key required");
  }
  if (options.fixed_bin >= m) throw ConfigError("fourth-moment: fixed bin out of range");
  const auto start = Clock::now();
  std::vector<double> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(keys.size(), 1.0);
  std::uint64_t q = 0;
  if (options.query_dependent) {
    const std::vector<std::uint64_t> key_list(keys.begin(), keys.end());
    q = default_query(key_list, scheme, options.query);
    if (std::find(keys.begin(), keys.end(), q) != keys.end()) {
      throw PreconditionError("fourth-moment: query key must not belong to the set");
    }
  }
  double total = 0;
  for (double x : w) total += x;
  const double mu = total / static_cast<double>(m);

  ExperimentReport report =
      start_report("fourth-moment", scheme, "keys:n=" + std::to_string(keys.size()), trials, ctx);

  struct Trial {
    double load = 0, dev4 = 0;
  };
  const auto results = run_trials<Trial>(trials, ctx.threads, [&](std::size_t t) {
    FreshHasher h(scheme, trial_seed(ctx.master_seed, t));
    std::size_t bin = options.fixed_bin;
    if (options.query_dependent) {
      const std::uint64_t hq = h(q);
      bin = options.select ? options.select(hq, m) : bin_of(hq, h.out_bits(), m);
      if (bin >= m) throw PreconditionError("fourth-moment: selector returned a bin out of range");
    }
    double load = 0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (bin_of(h(keys[i]), h.out_bits(), m) == bin) load += w[i];
    }
    const double d = load - mu;
    return Trial{load, d * d * d * d};
  });

  std::vector<double> loads, dev4, dev2;
  for (const auto& r : results) {
    loads.push_back(r.load);
    dev4.push_back(r.dev4);
    dev2.push_back((r.load - mu) * (r.load - mu));
  }
  const Summary s4 = summarize(dev4);
  const double exact = fourth_moment_truly_random(w, m);
  double s2w = 0;
  for (double x : w) s2w += x * x;
  const double p = 1.0 / static_cast<double>(m);
  report.stats["n"] = keys.size();
  report.stats["m"] = m;
  report.stats["mu"] = mu;
  report.stats["query_dependent"] = options.query_dependent;
  report.stats["load"] = to_json(summarize(loads));
  report.stats["second_moment"] = to_json(summarize(dev2));
  report.stats["second_moment_exact"] = s2w * p * (1 - p);
  report.stats["fourth_moment"] = to_json(s4);
  report.stats["fourth_moment_exact"] = exact;
  report.stats["ratio"] = exact > 0 ? s4.mean / exact : 0.0;
  report.stats["ratio_std_error"] = exact > 0 ? s4.std_error / exact : 0.0;
  report.per_run = dev4;
  report.work_items = static_cast<std::uint64_t>(trials) * keys.size();
  report.seconds = seconds_since(start);
  return report;
}

// ---- Exhaustive independence ---------------------------------------------

ExperimentReport exp_independence_exhaustive(const TabulationParams& params) {
  params.validate();
  const std::uint64_t sigma = params.alphabet_size();
  const std::uint64_t table_bits = params.c * sigma * params.out_bits;
  if (table_bits > 20) throw ConfigError("independence: tables exceed 20 bits");
  const std::uint64_t universe = std::uint64_t{1} << params.key_bits();
  const std::uint64_t fillings = std::uint64_t{1} << table_bits;
  const std::uint64_t outcomes3 = std::uint64_t{1} << (3 * params.out_bits);
  const std::uint64_t triples = universe * (universe - 1) * (universe - 2) / 6;
  if (triples * fillings > (std::uint64_t{1} << 33)) {
    throw ConfigError("independence: enumeration too large");
  }
  const auto start = Clock::now();
  const std::uint64_t out_mask = low_mask(params.out_bits);

  std::vector<std::uint64_t> counts(triples * outcomes3, 0);
  std::vector<std::uint64_t> h(universe);
  std::vector<std::uint64_t> entries(params.c * sigma);
  std::vector<std::uint64_t> quad;
  if (params.c >= 2) quad = {0, 1, sigma, sigma + 1};  // two values in each of the two low characters
  bool quad_zero = true;
  absl::flat_hash_set<std::string> images;

  for (std::uint64_t f = 0; f < fillings; ++f) {
    for (std::size_t e = 0; e < entries.size(); ++e) {
      entries[e] = (f >> (e * params.out_bits)) & out_mask;
    }
    const auto scheme = TabulationScheme::from_tables(params, entries);
    for (std::uint64_t x = 0; x < universe; ++x) h[x] = scheme(x);
    std::size_t idx = 0;
    for (std::uint64_t x = 0; x < universe; ++x) {
      for (std::uint64_t y = x + 1; y < universe; ++y) {
        for (std::uint64_t z = y + 1; z < universe; ++z, ++idx) {
          const std::uint64_t o = h[x] | (h[y] << params.out_bits) | (h[z] << (2 * params.out_bits));
          ++counts[idx * outcomes3 + o];
        }
      }
    }
    if (!quad.empty()) {
      quad_zero = quad_zero && (h[quad[0]] ^ h[quad[1]] ^ h[quad[2]] ^ h[quad[3]]) == 0;
    }
    if (params.c == 1) {
      images.emplace(reinterpret_cast<const char*>(h.data()), h.size() * sizeof(std::uint64_t));
    }
  }

  const std::uint64_t expected = fillings / outcomes3;
  bool uniform = fillings % outcomes3 == 0;
  for (std::uint64_t v : counts) uniform = uniform && v == expected;

  ExperimentReport report;
  report.experiment = "independence";
  report.scheme = "tab:c=" + std::to_string(params.c) + ",char=" +
                  std::to_string(params.char_bits) + ",out=" + std::to_string(params.out_bits);
  report.spec = "universe:n=" + std::to_string(universe);
  report.trials = fillings;
  report.stats["fillings"] = fillings;
  report.stats["triples"] = triples;
  report.stats["expected_count"] = expected;
  report.stats["three_wise_uniform"] = uniform;
  if (!quad.empty()) {
    report.stats["four_tuple"] = quad;
    report.stats["four_tuple_xor_zero"] = quad_zero;
  }
  if (params.c == 1) {
    // The map from fillings to hash vectors is onto all (2^out)^universe
    // vectors exactly when the keys hash fully independently.
    report.stats["fully_independent"] = images.size() == fillings;
  }
  report.work_items = fillings * universe;
  report.seconds = seconds_since(start);
  return report;
}

}  // namespace tabhash
