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

#ifndef TABHASH_LINEAR_PROBING_HPP_
#define TABHASH_LINEAR_PROBING_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tabhash/scheme.hpp"

namespace tabhash {

struct SearchResult {
  bool found = false;
  std::size_t probes = 0;
};

// Open addressing with linear probing and back-shift deletion, counting the
// slots every operation inspects. The home slot of a key is the top lg m
// bits of its hash.
//
// Invariant: for every stored key at slot s, the slots from its home up to
// s - 1 (cyclically) are occupied. At least one slot is always free.
//
// Not synchronized; readers may share a table only between mutations.
class LinearProbingTable {
 public:
  // capacity: a power of two >= 2 with lg(capacity) <= scheme.out_bits().
  LinearProbingTable(std::size_t capacity, SchemeHandle scheme);

  // Places the key at the first free slot from its home on and returns the
  // slots inspected, R(key, S) + 1. Throws DuplicateKeyError if present,
  // CapacityError if the insert would fill the last free slot.
  std::size_t insert(std::uint64_t key);

  // Scans from home to the key or the first free slot.
  SearchResult search(std::uint64_t key) const;

  // Removes the key and back-shifts the rest of its run. Returns
  // R(key, S) + 1, measured before shifting. Throws NotFoundError.
  std::size_t erase(std::uint64_t key);

  // Occupied slots from the key's home slot to the nearest free slot.
  std::size_t run_length(std::uint64_t key) const;
  std::size_t run_length_at(std::size_t slot) const;

  std::size_t home(std::uint64_t key) const;

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return keys_.size(); }
  double fill() const { return static_cast<double>(size_) / static_cast<double>(capacity()); }
  std::optional<std::uint64_t> slot(std::size_t i) const;

  std::uint64_t total_probes() const { return total_probes_; }
  std::uint64_t operations() const { return operations_; }
  std::size_t last_probes() const { return last_probes_; }
  void reset_counters();

  // True when every stored key is reachable from its home slot.
  bool audit() const;

  // One "slot,keyhex,homeslot" line per occupied slot.
  void dump(std::ostream& out) const;

  const SchemeHandle& scheme() const { return scheme_; }

 private:
  std::size_t record(std::size_t probes);

  SchemeHandle scheme_;
  unsigned lg_capacity_;
  std::size_t mask_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint64_t> homes_;
  std::vector<std::uint8_t> used_;
  std::size_t size_ = 0;
  std::uint64_t total_probes_ = 0;
  std::uint64_t operations_ = 0;
  std::size_t last_probes_ = 0;
};

}  // namespace tabhash

#endif  // TABHASH_LINEAR_PROBING_HPP_
