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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boost/math/distributions/chi_squared.hpp"
#include "oracles.hpp"
#include "tabhash/bins.hpp"
#include "tabhash/cuckoo.hpp"
#include "tabhash/experiments.hpp"
#include "tabhash/random_stream.hpp"
#include "tabhash/scheme.hpp"
#include "tabhash/tab_prng.hpp"
#include "tabhash/tabulation.hpp"
#include "tabhash/witness.hpp"

namespace {

using namespace tabhash;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double get(const ExperimentReport& r, const char* a, const char* b = nullptr) {
  return b == nullptr ? r.stats[a].get<double>() : r.stats[a][b].get<double>();
}

ExperimentContext g_ctx;

Outcome xor_cancellation() {
  const TabulationParams p{2, 8, 32};
  StrongStream draws(g_ctx.master_seed, 1);
  for (int i = 0; i < 10000; ++i) {
    const auto h = TabulationScheme::from_seed(p, draws.next());
    const std::uint64_t x1 = draws.bits(8), x2 = draws.bits(8);
    const std::uint64_t y1 = draws.bits(8), y2 = draws.bits(8);
    const std::uint64_t v = h(x1 | y1 << 8) ^ h(x1 | y2 << 8) ^ h(x2 | y1 << 8) ^ h(x2 | y2 << 8);
    if (v != 0) return {false, fmt("draw %d: xor = 0x%llx", i, static_cast<unsigned long long>(v))};
  }
  return {true, "10000 draws, xor 0 every time"};
}

Outcome three_independence() {
  const auto r = exp_independence_exhaustive({2, 1, 1});
  const bool uniform = r.stats["three_wise_uniform"].get<bool>();
  const bool zero = r.stats["four_tuple_xor_zero"].get<bool>();
  const auto fillings = r.stats["fillings"].get<std::uint64_t>();
  return {uniform && zero && fillings == 16,
          fmt("fillings=%llu, 3-wise uniform=%s, (00,01,10,11) xor 0 in all=%s",
              static_cast<unsigned long long>(fillings), uniform ? "yes" : "no",
              zero ? "yes" : "no")};
}

// Is h(keys[w]) independent of the other four hashes over all fillings?
bool independent_by_enumeration(const std::array<std::uint64_t, 5>& keys, std::size_t w,
                                const TabulationParams& p) {
  const unsigned entries = p.c * static_cast<unsigned>(p.alphabet_size());
  std::map<std::vector<std::uint64_t>, std::array<std::uint64_t, 2>> joint;
  std::vector<std::uint64_t> table(entries);
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << entries); ++f) {
    for (unsigned e = 0; e < entries; ++e) table[e] = (f >> e) & 1;
    const auto h = TabulationScheme::from_tables(p, table);
    std::vector<std::uint64_t> rest;
    for (std::size_t i = 0; i < 5; ++i) {
      if (i != w) rest.push_back(h(keys[i]));
    }
    ++joint[rest][h(keys[w])];
  }
  for (const auto& [rest, counts] : joint) {
    if (counts[0] != counts[1]) return false;
  }
  return true;
}

Outcome five_key_witness() {
  const TabulationParams p{2, 2, 1};
  std::size_t subsets = 0;
  std::array<std::uint64_t, 5> keys;
  for (std::uint64_t mask = 0; mask < (1u << 16); ++mask) {
    if (__builtin_popcountll(mask) != 5) continue;
    std::size_t j = 0;
    for (std::uint64_t k = 0; k < 16; ++k) {
      if (mask >> k & 1) keys[j++] = k;
    }
    const std::size_t w = independence_witness(keys, p);
    if (w >= 5 || !independent_by_enumeration(keys, w, p)) {
      return {false, fmt("subset mask 0x%llx: witness %zu not independent",
                         static_cast<unsigned long long>(mask), w)};
    }
    ++subsets;
  }
  return {subsets == 4368, fmt("%zu subsets verified by enumeration of 256 fillings", subsets)};
}

Outcome cuckoo_oracle() {
  StrongStream draws(g_ctx.master_seed, 4);
  const TabulationParams p{4, 8, 32};
  std::size_t ok = 0, failed = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 1 + draws.below(64);
    const std::size_t m = std::max<std::size_t>(1, std::bit_ceil(n) >> draws.below(3));
    std::vector<std::uint64_t> keys;
    while (keys.size() < n) {
      const std::uint64_t k = draws.bits(32);
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
    const SchemeHandle h0 = TabulationScheme::from_seed(p, draws.next());
    const SchemeHandle h1 = TabulationScheme::from_seed(p, draws.next());
    const unsigned lg = static_cast<unsigned>(std::countr_zero(m));
    std::vector<std::uint64_t> s0, s1;
    for (std::uint64_t k : keys) {
      s0.push_back(lg == 0 ? 0 : h0(k) >> (32 - lg));
      s1.push_back(lg == 0 ? 0 : h1(k) >> (32 - lg));
    }
    const auto result = cuckoo_build_static(keys, h0, h1, m);
    const bool feasible = testing::matching_feasible(s0, s1, m);
    if (succeeded(result) != feasible) {
      return {false, fmt("instance %d (n=%zu, m=%zu): build=%d, matching=%d", i, n, m,
                         succeeded(result), feasible)};
    }
    if (feasible) {
      if (!audit_placement(std::get<CuckooPlacement>(result), s0, s1, m)) {
        return {false, fmt("instance %d: placement fails audit", i)};
      }
      ++ok;
    } else {
      ++failed;
    }
  }
  return {true, fmt("10000 instances agree with matching (%zu feasible, %zu infeasible)", ok,
                    failed)};
}

Outcome cuckoo_hypercube() {
  const auto r = exp_cuckoo(parse_scheme("tab-c4"), {KeySetKind::kHypercube, 0, 0, 1, 32, 4, 0},
                            1 << 21, 100, g_ctx);
  const double p = get(r, "success", "p");
  return {p >= 0.97, fmt("n=2^20, m=2^21: success %.3f over 100 trials (need >= 0.97)", p)};
}

Outcome cuckoo_hard_subevents() {
  constexpr std::size_t m = 1 << 19, trials = 100000;
  constexpr std::uint64_t side = 64;  // n = 2^18
  const SchemeConfig tab = parse_scheme("tab-c4");
  const SchemeConfig rnd = parse_scheme("random");
  const auto t = cuckoo_subevents(tab, key_shape(tab), side, m, trials, g_ctx);
  const auto r = cuckoo_subevents(rnd, key_shape(rnd), side, m, trials, {g_ctx.master_seed + 1});
  const double p2 = 1 - std::exp(-(side * (side - 1) / 2.0) / m);
  const double se2 = std::sqrt(p2 * (1 - p2) / trials);
  const double se1 = std::hypot(t.triple_h0.std_error, r.triple_h0.std_error);
  const bool ok2 = std::abs(t.pair_h1.p - p2) <= 3 * se2;
  const bool ok1 = std::abs(t.triple_h0.p - r.triple_h0.p) <= 3 * se1;
  return {ok1 && ok2, fmt("P2 %.5f vs %.5f (3se %.5f); P1 %.5f vs random %.5f (3se %.5f)",
                          t.pair_h1.p, p2, 3 * se2, t.triple_h0.p, r.triple_h0.p, 3 * se1)};
}

double lp_mean(const char* scheme, const KeySetSpec& spec, std::size_t m, std::size_t ops,
               std::size_t trials, double* cv = nullptr) {
  LinearProbingOptions opts;
  opts.fresh_queries = 0;
  const auto r = exp_linear_probing(parse_scheme(scheme), spec, m, ops, trials, g_ctx, opts);
  if (cv != nullptr) *cv = get(r, "cv");
  return get(r, "probes_per_update", "mean");
}

Outcome linear_probing_reduced() {
  const KeySetSpec spec{KeySetKind::kRandom, 1 << 16, 0, 1, 0, 0, 0};
  const double tab = lp_mean("tab-c4", spec, 1 << 17, 100000, 10);
  const double rnd = lp_mean("random", spec, 1 << 17, 100000, 10);
  const double rel = std::abs(tab - rnd) / rnd;
  return {rel <= 0.05, fmt("n=2^16, 1e5 cycles, 10 runs: tab %.4f, random %.4f (diff %.2f%%)", tab,
                           rnd, 100 * rel)};
}

Outcome linear_probing_full() {
  const KeySetSpec spec{KeySetKind::kRandom, 1 << 20, 0, 1, 0, 0, 0};
  const double tab = lp_mean("tab-c4", spec, 1 << 21, 10000000, 10);
  return {tab >= 3.1 && tab <= 3.5,
          fmt("n=2^20, m=2^21, 1e7 cycles, 10 runs: mean %.4f (need [3.1, 3.5])", tab)};
}

Outcome structured_inputs() {
  double cv_dense = 0, cv_cube = 0;
  const double dense = lp_mean("tab-c4", {KeySetKind::kDenseInterval, 1 << 20, 0, 1, 0, 0, 0},
                               1 << 21, 1 << 21, 100, &cv_dense);
  const double cube = lp_mean("tab-c4", {KeySetKind::kHypercube, 0, 0, 1, 32, 4, 0}, 1 << 21,
                              1 << 21, 100, &cv_cube);
  return {cv_dense <= 0.02 && cv_cube <= 0.02,
          fmt("alpha=1/2, 100 runs: dense mean %.4f cv %.2f%%, hypercube mean %.4f cv %.2f%%",
              dense, 100 * cv_dense, cube, 100 * cv_cube)};
}

Outcome minwise_bias() {
  const KeySetSpec spec{KeySetKind::kDenseInterval, 1024, 0, 1, 0, 0, 0};
  std::string detail;
  bool pass = true;
  for (const char* scheme : {"tab:c=2,char=8,out=32", "random:key=16"}) {
    const auto r = exp_minwise(parse_scheme(scheme), spec, 1000000, g_ctx);
    const double pn = get(r, "p_times_n");
    const double gate = 0.02 + 3 * get(r, "p_times_n_std_error");
    pass = pass && std::abs(pn - 1) <= gate;
    detail += fmt("%s p*n %.4f (gate |p*n-1| <= %.4f); ", scheme, pn, gate);
  }
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

Outcome fourth_moment() {
  const auto keys = generate({KeySetKind::kHypercube, 0, 0, 1, 64, 2, 0}, {2, 8, 32});
  const std::vector<double> w(keys.size(), 1.0);
  constexpr std::size_t m = 256, trials = 100000;
  const auto rnd = exp_fourth_moment(parse_scheme("random:key=16"), keys, w, m, trials, g_ctx);
  const auto tab = exp_fourth_moment(parse_scheme("tab:c=2,char=8,out=32"), keys, w, m, trials,
                                     g_ctx);
  const double p = 1.0 / m, q = 1 - p, n = static_cast<double>(keys.size());
  const double exact = n * p * q * (1 + 3 * (n - 2) * p * q);
  const double rmean = get(rnd, "fourth_moment", "mean");
  const double rse = get(rnd, "fourth_moment", "std_error");
  const double ratio = get(tab, "fourth_moment", "mean") / exact;
  const bool ok = std::abs(rmean - exact) <= 3 * rse && ratio >= 0.5 && ratio <= 2.0;
  return {ok, fmt("exact %.3f; random %.3f (3se %.3f); tabulation ratio %.4f (need [0.5, 2])",
                  exact, rmean, 3 * rse, ratio)};
}

Outcome bottom_k_estimate() {
  const auto a = generate({KeySetKind::kRandom, 1024, 0, 1, 0, 0, 11}, {4, 8, 32});
  const std::vector<std::uint64_t> b(a.begin(), a.begin() + 256);
  std::string detail;
  bool pass = true;
  for (const char* scheme : {"random", "tab-c4"}) {
    const auto r = exp_set_similarity(parse_scheme(scheme), a, b, 64, 10000, g_ctx);
    const double est = get(r, "estimate", "mean");
    const double se = get(r, "estimate", "std_error");
    pass = pass && std::abs(est - 0.25) <= 3 * se;
    detail += fmt("%s %.4f (3se %.4f); ", scheme, est, 3 * se);
  }
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

Outcome prng() {
  // Equivalence with lopsided tabulation: T1[j] = poly(j) computed directly.
  TabPrng gen = TabPrng::create(g_ctx.master_seed, 1024, 32, 32);
  const auto& coeffs = gen.row_poly().params().coeffs;
  const std::vector<std::uint64_t> t2(gen.row_table().begin(), gen.row_table().end());
  const unsigned __int128 prime = (std::uint64_t{1} << 61) - 1;
  auto poly = [&](std::uint64_t x) {
    unsigned __int128 acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * (x % prime) + coeffs[i]) % prime;
    return static_cast<std::uint64_t>(acc) & 0xffffffffULL;
  };
  for (std::uint64_t i = 0; i < 100000; ++i) {
    if (gen.next() != (poly(i / 1024) ^ t2[i % 1024])) {
      return {false, fmt("output %llu differs from lopsided tabulation",
                         static_cast<unsigned long long>(i))};
    }
  }

  std::ostringstream fresh;
  write_prng_golden(fresh, make_prng_golden(0x1234, 4, 2, 32, 16));
  std::ifstream file(TABHASH_TEST_DATA "/prng_seed1234_R4_deg2.tprg", std::ios::binary);
  std::ostringstream stored;
  stored << file.rdbuf();
  const bool golden = fresh.str() == stored.str() && !stored.str().empty();

  TabPrng stream = TabPrng::create(g_ctx.master_seed + 1);
  std::array<std::array<std::uint64_t, 256>, 4> counts{};
  constexpr std::uint64_t outputs = 10000000;
  for (std::uint64_t i = 0; i < outputs; ++i) {
    const std::uint64_t v = stream.next();
    for (unsigned b = 0; b < 4; ++b) ++counts[b][(v >> (8 * b)) & 0xff];
  }
  const double limit = boost::math::quantile(boost::math::chi_squared(255), 0.999);
  const double expected = outputs / 256.0;
  double worst = 0;
  for (const auto& c : counts) {
    double chi = 0;
    for (std::uint64_t x : c) chi += (x - expected) * (x - expected) / expected;
    worst = std::max(worst, chi);
  }
  return {golden && worst < limit,
          fmt("1e5 outputs match lopsided tabulation; golden %s; worst byte chi-square %.1f "
              "(limit %.1f)",
              golden ? "matches" : "DIFFERS", worst, limit)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tabhash acceptance suite"};
  std::vector<int> only;
  bool full_lp = false;
  app.add_option("--only", only, "Run only these criteria")->delimiter(',');
  app.add_flag("--full-lp", full_lp, "Run the full-scale linear probing check instead");
  app.add_option("--seed", g_ctx.master_seed, "Master seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria = {
      {1, "xor cancellation", xor_cancellation},
      {2, "exhaustive 3-independence", three_independence},
      {3, "five-key witness", five_key_witness},
      {4, "cuckoo vs matching oracle", cuckoo_oracle},
      {5, "cuckoo hypercube", cuckoo_hypercube},
      {6, "cuckoo hard-instance sub-events", cuckoo_hard_subevents},
      {7, "linear probing vs random oracle", linear_probing_reduced},
      {8, "structured-input robustness", structured_inputs},
      {9, "minwise bias", minwise_bias},
      {10, "fourth moment", fourth_moment},
      {11, "bottom-k estimator", bottom_k_estimate},
      {12, "tabulation PRNG", prng},
  };
  if (full_lp) criteria = {{7, "linear probing full scale", linear_probing_full}};

  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
