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

#include "tabhash/witness.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tabhash/bits.hpp"
#include "tabhash/errors.hpp"

namespace tabhash {
namespace {

constexpr unsigned kRows = 5;
constexpr unsigned kAllRows = (1u << kRows) - 1;

// Row index of a single-bit row mask.
std::size_t row_of(unsigned mask) { return static_cast<std::size_t>(std::countr_zero(mask)); }

}  // namespace

std::size_t independence_witness(std::span<const std::uint64_t, 5> keys,
                                 const TabulationParams& params) {
  params.validate();
  const std::uint64_t key_mask = low_mask(params.key_bits());
  for (std::size_t i = 0; i < kRows; ++i) {
    if ((keys[i] & ~key_mask) != 0) throw PreconditionError("witness: key wider than key_bits");
    for (std::size_t j = 0; j < i; ++j) {
      if (keys[i] == keys[j]) throw PreconditionError("witness: keys must be distinct");
    }
  }

  // A unique position-character peels its key off the rest.
  for (std::size_t row = 0; row < kRows; ++row) {
    for (unsigned col = 0; col < params.c; ++col) {
      const std::uint64_t ch = params.character(keys[row], col);
      unsigned seen = 0;
      for (std::size_t other = 0; other < kRows; ++other) {
        seen += params.character(keys[other], col) == ch;
      }
      if (seen == 1) return row;
    }
  }

  // Every column is now constant or a 3/2 split. Keep the splits as 5-bit
  // row masks marking the twice-seen character, without duplicates.
  std::vector<unsigned> columns;
  for (unsigned col = 0; col < params.c; ++col) {
    const std::uint64_t first = params.character(keys[0], col);
    unsigned same_as_first = 0;
    for (std::size_t row = 0; row < kRows; ++row) {
      if (params.character(keys[row], col) == first) same_as_first |= 1u << row;
    }
    if (same_as_first == kAllRows) continue;
    const unsigned twice = std::popcount(same_as_first) == 2 ? same_as_first
                                                             : kAllRows & ~same_as_first;
    if (std::find(columns.begin(), columns.end(), twice) == columns.end()) {
      columns.push_back(twice);
    }
  }

  std::size_t best = std::numeric_limits<std::size_t>::max();
  auto offer = [&](unsigned zero_rows) {
    if (std::popcount(zero_rows) == 1) best = std::min(best, row_of(zero_rows));
  };

  // Columns at distance 4: the row outside both supports is independent.
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      if (std::popcount(columns[i] ^ columns[j]) == 4) {
        offer(kAllRows & ~(columns[i] | columns[j]));
      }
    }
  }
  if (best != std::numeric_limits<std::size_t>::max()) return best;

  // All distances are 2. Two columns leave a pair of rows that are 0 in
  // both; a third column separating that pair leaves exactly one row that
  // is 0 everywhere, and the other four rows xor to zero.
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      const unsigned both = columns[i] | columns[j];
      const unsigned tied = kAllRows & ~both;
      for (unsigned d : columns) {
        if (std::popcount(d & tied) == 1) offer(kAllRows & ~(both | d));
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw std::logic_error("witness: no independent key found for distinct keys");
  }
  return best;
}

}  // namespace tabhash
