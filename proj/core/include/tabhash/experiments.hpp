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

#ifndef TABHASH_EXPERIMENTS_HPP_
#define TABHASH_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tabhash/keyset.hpp"
#include "tabhash/report.hpp"
#include "tabhash/scheme.hpp"

namespace tabhash {

// Shared knobs. Trial t hashes with functions seeded from
// derive_seed(master_seed, ...), so a run is reproducible from
// (configuration, master_seed) alone, whatever the thread count.
struct ExperimentContext {
  std::uint64_t master_seed = 1;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Character layout used to generate instances for a scheme: 8-bit
// characters over the scheme's key width (4, 2 or 1 bits when 8 does not
// divide it). It does not depend on the tabulation character width, so every
// scheme with the same key width sees the same key set.
TabulationParams key_shape(const SchemeConfig& scheme);

// Seed of the hash function with role `role` in trial `trial`.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial, std::uint64_t role = 0);

// ---- Bins ---------------------------------------------------------------

struct BinOptions {
  std::size_t fixed_bin = 0;
  std::optional<std::uint64_t> query;  // default: first key outside the set
  std::function<std::size_t(std::uint64_t, std::size_t)> select;  // default: top bits
};

// Per trial: max load, load of a fixed bin and of the bin selected by the
// query key's hash, against mu = n / m.
ExperimentReport exp_bin_concentration(const SchemeConfig& scheme, const KeySetSpec& spec,
                                       std::size_t m, std::size_t trials,
                                       const ExperimentContext& ctx = {},
                                       const BinOptions& options = {});

// ---- Linear probing -----------------------------------------------------

struct LinearProbingOptions {
  std::size_t fresh_queries = 1000;
};

// Fills a table of size m with the key set, then runs `ops` update cycles;
// cycle i deletes key i mod n and inserts it again. Reports probes per
// update (across-trial mean, variance, coefficient of variation), insert
// and delete costs separately, and R for fresh query keys at the end of
// each trial, including Pr[R > 0]. Throws ConfigError if n >= m.
ExperimentReport exp_linear_probing(const SchemeConfig& scheme, const KeySetSpec& spec,
                                    std::size_t m, std::size_t ops, std::size_t trials,
                                    const ExperimentContext& ctx = {},
                                    const LinearProbingOptions& options = {});

// ---- Cuckoo hashing -----------------------------------------------------

struct CuckooSubevents {
  Proportion triple_h0;  // P1: some 3 two-character half-keys share an h0 position
  Proportion pair_h1;    // P2: some 2 one-character half-keys share an h1 position
  Proportion both;
};

struct CuckooOptions {
  // Extra trials for the cheap sub-event measurement on cuckoo-hard
  // instances; 0 reuses `trials`.
  std::size_t subevent_trials = 0;
  bool build = true;  // false: measure sub-events only
};

// Builds the static cuckoo table with two fresh functions per trial and
// reports the success fraction. Cuckoo-hard instances also report the two
// sub-events whose conjunction forces failure.
ExperimentReport exp_cuckoo(const SchemeConfig& scheme, const KeySetSpec& spec, std::size_t m,
                            std::size_t trials, const ExperimentContext& ctx = {},
                            const CuckooOptions& options = {});

// Sub-events on the cube [side]^3 laid out on `shape`'s three low
// characters: the side^2 half-keys (x, y, 0) under h0 and the side
// half-keys (0, 0, z) under h1.
CuckooSubevents cuckoo_subevents(const SchemeConfig& scheme, const TabulationParams& shape,
                                 std::uint64_t side, std::size_t m, std::size_t trials,
                                 const ExperimentContext& ctx = {});

// ---- Minwise ------------------------------------------------------------

struct MinwiseOptions {
  std::optional<std::uint64_t> query;  // default: first key outside the set
};

// Estimates Pr[h(q) < min h(S)] over fresh functions; q loses ties. Throws
// PreconditionError if q is in S and ConfigError when out_bits is below
// (1 + 1/c) lg n (c = 1 for non-tabulation schemes).
ExperimentReport exp_minwise(const SchemeConfig& scheme, const KeySetSpec& spec,
                             std::size_t trials, const ExperimentContext& ctx = {},
                             const MinwiseOptions& options = {});

// ---- Set similarity ------------------------------------------------------

// Bottom-k estimate |B ∩ S| / k of |B| / |A| (computed when B ⊆ A), and the
// frequency of min h(A) == min h(B). Throws ConfigError if k > |A| or k == 0.
ExperimentReport exp_set_similarity(const SchemeConfig& scheme,
                                    std::span<const std::uint64_t> a,
                                    std::span<const std::uint64_t> b, std::size_t k,
                                    std::size_t trials, const ExperimentContext& ctx = {});

// The k keys of `keys` with the smallest hashes (ties by key value).
std::vector<std::uint64_t> bottom_k(std::span<const std::uint64_t> keys,
                                    const SchemeHandle& scheme, std::size_t k);

// ---- Fourth moment -------------------------------------------------------

struct FourthMomentOptions {
  bool query_dependent = false;
  std::size_t fixed_bin = 0;
  std::optional<std::uint64_t> query;
  std::function<std::size_t(std::uint64_t, std::size_t)> select;
};

// E[(W - mu)^4] for the load W of the selected bin, next to the exact value
// under fully random hashing. `weights` empty means unit weights.
ExperimentReport exp_fourth_moment(const SchemeConfig& scheme, std::span<const std::uint64_t> keys,
                                   std::span<const double> weights, std::size_t m,
                                   std::size_t trials, const ExperimentContext& ctx = {},
                                   const FourthMomentOptions& options = {});

// Exact E[(W - mu)^4] when every key lands in the bin independently with
// probability 1/m.
double fourth_moment_truly_random(std::span<const double> weights, std::size_t m);

// ---- Exhaustive independence ---------------------------------------------

// Enumerates every filling of the tables (c * 2^char_bits * out_bits <= 20
// bits) and checks exact 3-wise uniformity of every key triple; for c >= 2
// also the 2x2 sub-cube whose four hashes always xor to zero, for c == 1
// full independence of the whole universe.
ExperimentReport exp_independence_exhaustive(const TabulationParams& params);

}  // namespace tabhash

#endif  // TABHASH_EXPERIMENTS_HPP_
