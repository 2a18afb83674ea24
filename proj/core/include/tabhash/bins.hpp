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

#ifndef TABHASH_BINS_HPP_
#define TABHASH_BINS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "tabhash/scheme.hpp"

namespace tabhash {

// Per-bin loads after hashing a key set into m bins.
struct BinHistogram {
  std::vector<std::uint64_t> counts;
  // Sum of key weights per bin; empty when the keys were unweighted.
  std::vector<double> weighted;
  std::size_t selected_bin = 0;

  std::uint64_t total() const;
  std::uint64_t max_load() const;
  double selected_load() const;
};

struct FixedBin {
  std::size_t bin = 0;
};

// Bin chosen from the hash of a designated query key outside the set. The
// default selector takes the top lg m bits of h(query).
struct QueryBin {
  std::uint64_t query = 0;
  std::function<std::size_t(std::uint64_t hash, std::size_t m)> select;
};

using BinSelector = std::variant<FixedBin, QueryBin>;

// Hashes every key into one of m bins (m a power of two), the bin being the
// top lg m bits of the hash. Throws PreconditionError if a QueryBin's query
// is among the keys or `weights` has the wrong length.
BinHistogram bins_distribute(std::span<const std::uint64_t> keys, const SchemeHandle& scheme,
                             std::size_t m, const BinSelector& selector = FixedBin{},
                             std::span<const double> weights = {});

// Bin of a hash among m bins under `scheme`'s output width.
std::size_t bin_of(std::uint64_t hash, unsigned out_bits, std::size_t m);

}  // namespace tabhash

#endif  // TABHASH_BINS_HPP_
