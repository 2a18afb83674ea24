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

#include "tabhash/bins.hpp"

#include <algorithm>
#include <numeric>

#include "tabhash/bits.hpp"
#include "tabhash/errors.hpp"

namespace tabhash {

std::uint64_t BinHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t BinHistogram::max_load() const {
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

double BinHistogram::selected_load() const {
  if (!weighted.empty()) return weighted[selected_bin];
  return static_cast<double>(counts[selected_bin]);
}

std::size_t bin_of(std::uint64_t hash, unsigned out_bits, std::size_t m) {
  return static_cast<std::size_t>(top_bits(hash, out_bits, log2_exact(m)));
}

BinHistogram bins_distribute(std::span<const std::uint64_t> keys, const SchemeHandle& scheme,
                             std::size_t m, const BinSelector& selector,
                             std::span<const double> weights) {
  if (!is_power_of_two(m)) throw ConfigError("bins: m must be a power of two");
  const unsigned out_bits = scheme.out_bits();
  if (log2_exact(m) > out_bits) throw ConfigError("bins: hash has fewer than lg m bits");
  if (!weights.empty() && weights.size() != keys.size()) {
    throw PreconditionError("bins: one weight per key required");
  }

  BinHistogram hist;
  hist.counts.assign(m, 0);
  if (!weights.empty()) hist.weighted.assign(m, 0.0);

  if (const auto* fixed = std::get_if<FixedBin>(&selector)) {
    if (fixed->bin >= m) throw PreconditionError("bins: fixed bin out of range");
    hist.selected_bin = fixed->bin;
  } else {
    const auto& query = std::get<QueryBin>(selector);
    if (std::find(keys.begin(), keys.end(), query.query) != keys.end()) {
      throw PreconditionError("bins: query key must not belong to the key set");
    }
    const std::uint64_t hq = scheme(query.query);
    hist.selected_bin = query.select ? query.select(hq, m) : bin_of(hq, out_bits, m);
    if (hist.selected_bin >= m) throw PreconditionError("bins: selector returned a bin out of range");
  }

  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::size_t b = bin_of(scheme(keys[i]), out_bits, m);
    ++hist.counts[b];
    if (!weights.empty()) hist.weighted[b] += weights[i];
  }
  return hist;
}

}  // namespace tabhash
